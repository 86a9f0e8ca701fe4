"""
Exact dense linear algebra over the rationals.

Matrices are tuples of rows, each row a tuple of :class:`fractions.Fraction`.
Subspaces are stored as :class:`RowSpace` objects whose basis is always in
reduced row-echelon form, so two subspaces are equal iff their bases are.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import AmbientMismatch, NotASubspace

Rational = Fraction
Row = tuple  # tuple[Fraction, ...]
RatMatrix = tuple  # tuple[Row, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_matrix(rows: Iterable[Iterable]) -> RatMatrix:
    """Coerce nested iterables of ints/strings/Fractions into a RatMatrix."""
    out = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if out and len({len(r) for r in out}) != 1:
        raise ValueError("ragged matrix")
    return out


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def format_rational(x: Fraction) -> str:
    return str(x)


def _rref_with_pivots(rows: Sequence[Sequence[Fraction]], ncols: int):
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                p = i
                break
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        if piv != 1:
            inv = 1 / piv
            m[r] = [x * inv for x in m[r]]
        prow = m[r]
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f != 0:
                    row = m[i]
                    m[i] = [a - f * b for a, b in zip(row, prow)]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in m[:r]), tuple(pivots)


def rref(m: Sequence[Sequence]) -> RatMatrix:
    """Reduced row-echelon form with zero rows removed."""
    rows = as_matrix(m)
    if not rows:
        return ()
    return _rref_with_pivots(rows, len(rows[0]))[0]


def rank(m: Sequence[Sequence]) -> int:
    return len(rref(m))


def left_kernel(m: Sequence[Sequence], nrows: int | None = None) -> RatMatrix:
    """Basis (in RREF) of ``{x : x @ m == 0}``.

    ``nrows`` must be given when ``m`` has no columns or no rows would make
    the row count ambiguous.
    """
    rows = as_matrix(m)
    k = len(rows) if nrows is None else nrows
    if k == 0:
        return ()
    ncols = len(rows[0]) if rows else 0
    # augment with identity and eliminate on the left block
    aug = [list(rows[i]) + [_ONE if j == i else _ZERO for j in range(k)]
           for i in range(k)] if rows else [[_ONE if j == i else _ZERO for j in range(k)] for i in range(k)]
    red, piv = _rref_with_pivots(aug, ncols + k)
    kern = [r[ncols:] for r, p in zip(red, piv) if p >= ncols]
    return rref(kern) if kern else ()


@dataclass(frozen=True)
class RowSpace:
    """A subspace of Q^ambient_dim given by an RREF basis."""

    ambient_dim: int
    basis: RatMatrix = ()

    def __post_init__(self):
        for row in self.basis:
            if len(row) != self.ambient_dim:
                raise AmbientMismatch("basis row length differs from ambient dimension")

    @classmethod
    def span(cls, ambient_dim: int, rows: Iterable[Iterable] = ()) -> "RowSpace":
        rows = as_matrix(rows)
        if any(len(r) != ambient_dim for r in rows):
            raise AmbientMismatch("vector length differs from ambient dimension")
        return cls(ambient_dim, rref(rows) if rows else ())

    @classmethod
    def zero(cls, ambient_dim: int) -> "RowSpace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "RowSpace":
        return cls.span(ambient_dim, unit_rows(ambient_dim, range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple:
        return tuple(next(i for i, x in enumerate(r) if x != 0) for r in self.basis)

    def __len__(self):
        return self.dim

    def _check(self, other: "RowSpace"):
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch(f"ambient {self.ambient_dim} != {other.ambient_dim}")

    def __add__(self, other: "RowSpace") -> "RowSpace":
        return space_sum(self, other)

    def __and__(self, other: "RowSpace") -> "RowSpace":
        return space_intersect(self, other)

    def reduce(self, v: Sequence) -> Row:
        """Normal form of ``v`` modulo this subspace (pivot entries cleared)."""
        v = [Fraction(x) for x in v]
        for row, c in zip(self.basis, self.pivots):
            f = v[c]
            if f != 0:
                v = [a - f * b for a, b in zip(v, row)]
        return tuple(v)

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def issubspace(self, other: "RowSpace") -> bool:
        self._check(other)
        return all(other.contains(r) for r in self.basis)

    def complement_columns(self) -> tuple:
        """Column indices that are not pivots; they index a basis of the quotient."""
        piv = set(self.pivots)
        return tuple(c for c in range(self.ambient_dim) if c not in piv)


def unit_rows(n: int, indices: Iterable[int]) -> RatMatrix:
    return tuple(tuple(_ONE if j == i else _ZERO for j in range(n)) for i in indices)


def space_sum(a: RowSpace, b: RowSpace) -> RowSpace:
    a._check(b)
    if not b.basis:
        return a
    if not a.basis:
        return b
    return RowSpace(a.ambient_dim, rref(a.basis + b.basis))


def space_intersect(a: RowSpace, b: RowSpace) -> RowSpace:
    """Intersection by the Zassenhaus construction on ``[[a, a], [b, 0]]``."""
    a._check(b)
    n = a.ambient_dim
    if not a.basis or not b.basis:
        return RowSpace.zero(n)
    zeros = (_ZERO,) * n
    block = [r + r for r in a.basis] + [r + zeros for r in b.basis]
    red, piv = _rref_with_pivots(block, 2 * n)
    inter = [r[n:] for r, p in zip(red, piv) if p >= n]
    return RowSpace(n, rref(inter) if inter else ())


def quotient_dim(sub: RowSpace, total: RowSpace) -> int:
    if not sub.issubspace(total):
        raise NotASubspace("first argument is not contained in the second")
    return total.dim - sub.dim
