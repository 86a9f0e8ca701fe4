"""
Element-level arithmetic in the path algebra kQ of an acyclic quiver over Q.

Two-sided ideals (and all their products, sums and intersections) are kept as
:class:`GradedSubspace` objects: one :class:`RowSpace` per (source, target)
pair of vertices, inside the span of the paths with that source and target.
Any subspace stable under multiplication by the vertex idempotents splits this
way, and it keeps every linear-algebra problem small.
"""
from __future__ import annotations

import os
import re
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import (BasisMismatch, CyclicQuiver, DimensionCapExceeded,
                     NonAdmissible, RelationSyntaxError)
from .exactlin import RowSpace, quotient_dim, unit_rows
from .quiver import Path, Quiver, enumerate_paths, is_acyclic, longest_path_length

DEFAULT_MAX_DIM = 5000


def max_dim_cap() -> int:
    return int(os.environ.get("SPECALC_MAX_DIM", DEFAULT_MAX_DIM))


class PathBasis:
    """The basis of kQ given by all paths of an acyclic quiver."""

    def __init__(self, quiver: Quiver):
        if not is_acyclic(quiver):
            raise CyclicQuiver("path algebra of a quiver with oriented cycles is infinite-dimensional")
        self.quiver = quiver
        self.paths = enumerate_paths(quiver)
        cap = max_dim_cap()
        if len(self.paths) > cap:
            raise DimensionCapExceeded(f"{len(self.paths)} paths exceed SPECALC_MAX_DIM={cap}")
        self._index = {(p.source, p.target, p.edges): k for k, p in enumerate(self.paths)}
        self.by_pair = {}
        self.local = []
        for k, p in enumerate(self.paths):
            lst = self.by_pair.setdefault((p.source, p.target), [])
            self.local.append(len(lst))
            lst.append(k)
        self._tables = {}

    def __len__(self):
        return len(self.paths)

    @property
    def n_vertices(self) -> int:
        return self.quiver.n_vertices

    @cached_property
    def longest(self) -> int:
        return longest_path_length(self.quiver)

    def index(self, p: Path) -> int:
        return self._index[(p.source, p.target, tuple(p.edges))]

    def pair_dim(self, pair) -> int:
        return len(self.by_pair.get(pair, ()))

    def pairs(self) -> list:
        return sorted(self.by_pair)

    def concat(self, i: int, j: int) -> Optional[int]:
        """Index of ``paths[i] * paths[j]`` (j traversed first), or None."""
        u, v = self.paths[i], self.paths[j]
        if u.source != v.target:
            return None
        return self._index[(v.source, u.target, u.edges + v.edges)]

    def product_table(self, left_pair, right_pair) -> list:
        """Triples (i, j, k) of local indices with left_i * right_j = result_k."""
        key = (left_pair, right_pair)
        tab = self._tables.get(key)
        if tab is None:
            tab = []
            if left_pair[0] == right_pair[1]:
                for gi in self.by_pair.get(left_pair, ()):
                    for gj in self.by_pair.get(right_pair, ()):
                        gk = self.concat(gi, gj)
                        tab.append((self.local[gi], self.local[gj], self.local[gk]))
            self._tables[key] = tab
        return tab

    def length_of(self, pair, local_index: int) -> int:
        return self.paths[self.by_pair[pair][local_index]].length

    def vertex(self, v: int) -> "AlgElement":
        return AlgElement(self, {self.index(Path(v, v, ())): Fraction(1)})

    def edge(self, label) -> "AlgElement":
        e = self.quiver.edge_by_label(label) if isinstance(label, str) else self.quiver.edges[label]
        return AlgElement(self, {self.index(Path(e.source, e.target, (e.id,))): Fraction(1)})

    def path(self, p: Path) -> "AlgElement":
        return AlgElement(self, {self.index(p): Fraction(1)})


def _mul_vec(table, x, y, n_out):
    out = [Fraction(0)] * n_out
    for i, j, k in table:
        a = x[i]
        if a:
            b = y[j]
            if b:
                out[k] += a * b
    return out


class AlgElement:
    """A finite linear combination of paths."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis: PathBasis, coeffs: Optional[dict] = None):
        self.basis = basis
        self.coeffs = {k: Fraction(v) for k, v in (coeffs or {}).items() if v != 0}

    def _same(self, other):
        if other.basis is not self.basis:
            raise BasisMismatch("elements live in different path algebras")

    def __add__(self, other):
        self._same(other)
        c = dict(self.coeffs)
        for k, v in other.coeffs.items():
            c[k] = c.get(k, 0) + v
        return AlgElement(self.basis, c)

    def __neg__(self):
        return AlgElement(self.basis, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        return AlgElement(self.basis, {k: Fraction(scalar) * v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgElement):
            return self.__rmul__(other)
        return multiply(self, other)

    def __eq__(self, other):
        return isinstance(other, AlgElement) and other.basis is self.basis and other.coeffs == self.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def pairs(self) -> set:
        return {(self.basis.paths[k].source, self.basis.paths[k].target) for k in self.coeffs}

    def min_length(self) -> int:
        return min(self.basis.paths[k].length for k in self.coeffs)

    def pair_vector(self):
        """(pair, local coordinate vector) for a (source, target)-homogeneous element."""
        pairs = self.pairs()
        if len(pairs) != 1:
            raise ValueError("element is not homogeneous in (source, target)")
        pair = pairs.pop()
        vec = [Fraction(0)] * self.basis.pair_dim(pair)
        for k, v in self.coeffs.items():
            vec[self.basis.local[k]] = v
        return pair, vec

    def __repr__(self):
        if not self.coeffs:
            return "0"
        q = self.basis.quiver
        return " + ".join(f"{v}*{self.basis.paths[k].word(q)}" for k, v in sorted(self.coeffs.items()))


def element_from_vector(pb: PathBasis, pair, vec) -> AlgElement:
    return AlgElement(pb, {pb.by_pair[pair][i]: x for i, x in enumerate(vec) if x})


def multiply(a: AlgElement, b: AlgElement) -> AlgElement:
    """Bilinear extension of concatenation; ``a*b`` runs ``b`` first."""
    a._same(b)
    pb = a.basis
    out = {}
    for i, x in a.coeffs.items():
        for j, y in b.coeffs.items():
            k = pb.concat(i, j)
            if k is not None:
                out[k] = out.get(k, 0) + x * y
    return AlgElement(pb, out)


class GradedSubspace:
    """A subspace of kQ split by (source, target); missing blocks are zero."""

    def __init__(self, basis: PathBasis, blocks: Optional[dict] = None):
        self.basis = basis
        self.blocks = {}
        for pair, rs in (blocks or {}).items():
            if rs.ambient_dim != basis.pair_dim(pair):
                raise ValueError(f"block {pair} has the wrong ambient dimension")
            if rs.dim:
                self.blocks[pair] = rs

    @classmethod
    def from_vectors(cls, pb: PathBasis, vectors: Iterable) -> "GradedSubspace":
        """From an iterable of ``(pair, local_vector)``."""
        rows = {}
        for pair, vec in vectors:
            rows.setdefault(pair, []).append(vec)
        return cls(pb, {p: RowSpace.span(pb.pair_dim(p), r) for p, r in rows.items()})

    @classmethod
    def from_elements(cls, pb: PathBasis, elems: Iterable[AlgElement]) -> "GradedSubspace":
        return cls.from_vectors(pb, (e.pair_vector() for e in elems if not e.is_zero()))

    def block(self, pair) -> RowSpace:
        return self.blocks.get(pair) or RowSpace.zero(self.basis.pair_dim(pair))

    def _same(self, other):
        if other.basis is not self.basis:
            raise BasisMismatch("subspaces live in different path algebras")

    def __add__(self, other: "GradedSubspace") -> "GradedSubspace":
        self._same(other)
        keys = set(self.blocks) | set(other.blocks)
        return GradedSubspace(self.basis, {p: self.block(p) + other.block(p) for p in keys})

    def __and__(self, other: "GradedSubspace") -> "GradedSubspace":
        self._same(other)
        keys = set(self.blocks) & set(other.blocks)
        return GradedSubspace(self.basis, {p: self.blocks[p] & other.blocks[p] for p in keys})

    def __mul__(self, other: "GradedSubspace") -> "GradedSubspace":
        return ideal_product(self, other)

    def __eq__(self, other):
        return isinstance(other, GradedSubspace) and other.basis is self.basis and self.blocks == other.blocks

    def __le__(self, other: "GradedSubspace") -> bool:
        self._same(other)
        return all(rs.issubspace(other.block(p)) for p, rs in self.blocks.items())

    @property
    def dim(self) -> int:
        return sum(rs.dim for rs in self.blocks.values())

    def is_zero(self) -> bool:
        return not self.blocks

    def contains(self, x: AlgElement) -> bool:
        for pair in x.pairs():
            vec = [Fraction(0)] * self.basis.pair_dim(pair)
            for k, v in x.coeffs.items():
                p = self.basis.paths[k]
                if (p.source, p.target) == pair:
                    vec[self.basis.local[k]] = v
            if not self.block(pair).contains(vec):
                return False
        return True

    def vectors(self):
        for pair in sorted(self.blocks):
            for row in self.blocks[pair].basis:
                yield pair, row

    def elements(self) -> list:
        return [element_from_vector(self.basis, pair, row) for pair, row in self.vectors()]

    def quotient_dims(self, sub: "GradedSubspace") -> dict:
        """Per-pair ``dim self/sub``; ``sub`` must be contained in ``self``."""
        self._same(sub)
        keys = set(self.blocks) | set(sub.blocks)
        return {p: quotient_dim(sub.block(p), self.block(p)) for p in keys}

    def __repr__(self):
        return f"GradedSubspace(dim={self.dim}, blocks={ {p: rs.dim for p, rs in sorted(self.blocks.items())} })"


def dims_by_pair(x: GradedSubspace):
    """``(matrix, total)``; entry [i][j] is the dimension in the paths i -> j."""
    n = x.basis.n_vertices
    mat = [[0] * n for _ in range(n)]
    for (s, t), rs in x.blocks.items():
        mat[s][t] += rs.dim
    return mat, sum(map(sum, mat))


def radical_power(pb: PathBasis, n: int) -> GradedSubspace:
    """Span of all paths of length >= n."""
    blocks = {}
    for pair, idx in pb.by_pair.items():
        keep = [i for i, g in enumerate(idx) if pb.paths[g].length >= n]
        if keep:
            blocks[pair] = RowSpace(len(idx), unit_rows(len(idx), keep))
    return GradedSubspace(pb, blocks)


def full_algebra(pb: PathBasis) -> GradedSubspace:
    return radical_power(pb, 0)


def ideal_product(x: GradedSubspace, y: GradedSubspace) -> GradedSubspace:
    """Span of all products u*v with u in x, v in y."""
    x._same(y)
    pb = x.basis
    rows = {}
    for lp, xs in x.blocks.items():
        for rp, ys in y.blocks.items():
            if lp[0] != rp[1]:
                continue
            tab = pb.product_table(lp, rp)
            if not tab:
                continue
            out = (rp[0], lp[1])
            n_out = pb.pair_dim(out)
            acc = rows.setdefault(out, [])
            for u in xs.basis:
                for v in ys.basis:
                    w = _mul_vec(tab, u, v, n_out)
                    if any(w):
                        acc.append(w)
    return GradedSubspace(pb, {p: RowSpace.span(pb.pair_dim(p), r) for p, r in rows.items() if r})


def _edge_multiples(pb: PathBasis, pair, vec):
    """All e*v and v*e for single edges e."""
    s, t = pair
    for e in pb.quiver.out_edges(t):
        lp = (t, e.target)
        tab = pb.product_table(lp, pair)
        ev = [Fraction(0)] * pb.pair_dim(lp)
        ev[pb.local[pb.index(Path(t, e.target, (e.id,)))]] = Fraction(1)
        yield (s, e.target), _mul_vec(tab, ev, vec, pb.pair_dim((s, e.target)))
    for e in pb.quiver.in_edges(s):
        rp = (e.source, s)
        tab = pb.product_table(pair, rp)
        ev = [Fraction(0)] * pb.pair_dim(rp)
        ev[pb.local[pb.index(Path(e.source, s, (e.id,)))]] = Fraction(1)
        yield (e.source, t), _mul_vec(tab, vec, ev, pb.pair_dim((e.source, t)))


def two_sided_ideal(pb: PathBasis, gens: Iterable[AlgElement]) -> GradedSubspace:
    """Smallest two-sided ideal containing ``gens``.

    Closes the generators under left and right multiplication by single
    edges; every round raises the minimal path length of the new vectors, so
    at most ``longest + 1`` rounds are needed.
    """
    gens = [g for g in gens if not g.is_zero()]
    spaces = dict(GradedSubspace.from_elements(pb, gens).blocks)
    # frontier keeps unreduced edge-word multiples, so round k only holds
    # products with k edges and the loop stops once k exceeds the longest path
    frontier = [g.pair_vector() for g in gens]
    rounds = 0
    while frontier:
        rounds += 1
        assert rounds <= pb.longest + 2, "ideal saturation did not terminate"
        new = []
        for pair, vec in frontier:
            for out, w in _edge_multiples(pb, pair, vec):
                if not any(w):
                    continue
                blk = spaces.get(out) or RowSpace.zero(pb.pair_dim(out))
                if not blk.contains(w):
                    spaces[out] = blk + RowSpace.span(blk.ambient_dim, [w])
                    new.append((out, w))
        frontier = new
    return GradedSubspace(pb, spaces)


_TERM = re.compile(r"\s*([+-]?)\s*([^+-]+)")


def parse_relation(text: str, pb: PathBasis) -> AlgElement:
    """Parse a combination of edge-label words such as ``"b*a - 2/3*d*c"``.

    Words compose right to left: ``b*a`` traverses ``a`` first.
    """
    q = pb.quiver
    body = text.strip()
    if not body:
        raise RelationSyntaxError("empty relation")
    result = AlgElement(pb)
    pos = 0
    for m in _TERM.finditer(body):
        if m.start() != pos:
            raise RelationSyntaxError(f"cannot parse {text!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        factors = [f.strip() for f in m.group(2).split("*")]
        if any(not f for f in factors):
            raise RelationSyntaxError(f"empty factor in {text!r}")
        coeff = Fraction(sign)
        while factors and re.fullmatch(r"\d+(/\d+)?", factors[0]):
            coeff *= Fraction(factors.pop(0))
        if not factors:
            raise NonAdmissible(f"constant term in relation {text!r}")
        try:
            edges = [q.edge_by_label(f) for f in factors]
        except KeyError as err:
            raise RelationSyntaxError(f"unknown edge label {err} in {text!r}") from None
        for left, right in zip(edges, edges[1:]):
            if left.source != right.target:
                raise RelationSyntaxError(f"{left.name}*{right.name} is not a path in {text!r}")
        p = Path(edges[-1].source, edges[0].target, tuple(e.id for e in edges))
        result = result + coeff * pb.path(p)
    if pos != len(body):
        raise RelationSyntaxError(f"trailing input in {text!r}")
    return result


class AlgebraPresentation:
    """A = kQ/I for an acyclic quiver Q and an admissible ideal I."""

    def __init__(self, quiver: Quiver, relations: Sequence = (), basis: Optional[PathBasis] = None):
        self.quiver = quiver
        self.basis = basis if basis is not None else PathBasis(quiver)
        rels = []
        for r in relations:
            if isinstance(r, str):
                r = parse_relation(r, self.basis)
            elif r.basis is not self.basis:
                raise BasisMismatch("relation lives in a different path algebra")
            rels.append(r)
        for r in rels:
            if r.is_zero():
                continue
            if len(r.pairs()) != 1:
                raise NonAdmissible(f"relation {r!r} is not homogeneous in (source, target)")
            if r.min_length() < 2:
                raise NonAdmissible(f"relation {r!r} has a term of length < 2")
        self.relations = tuple(rels)
        self.ideal = two_sided_ideal(self.basis, rels)

    @classmethod
    def path_algebra(cls, quiver: Quiver) -> "AlgebraPresentation":
        return cls(quiver, ())

    @cached_property
    def radical(self) -> GradedSubspace:
        return radical_power(self.basis, 1)

    @property
    def n_vertices(self) -> int:
        return self.quiver.n_vertices

    def dim(self) -> int:
        return len(self.basis) - self.ideal.dim

    def dims_by_pair(self) -> list:
        full, _ = dims_by_pair(full_algebra(self.basis))
        ideal, _ = dims_by_pair(self.ideal)
        n = self.n_vertices
        return [[full[i][j] - ideal[i][j] for j in range(n)] for i in range(n)]

    def relation_words(self) -> list:
        """Relations rendered back into the input language."""
        out = []
        q = self.quiver
        for r in self.relations:
            terms = []
            for k, v in sorted(r.coeffs.items()):
                w = self.basis.paths[k].word(q)
                terms.append((v, w))
            s = ""
            for v, w in terms:
                sign = "-" if v < 0 else "+"
                mag = abs(v)
                body = w if mag == 1 else f"{mag}*{w}"
                s += (f" {sign} " if s else ("-" if sign == "-" else "")) + body
            out.append(s)
        return out


def linear_quiver(n: int) -> Quiver:
    """1 -> 2 -> ... -> n with edges a1..a_{n-1}, vertices indexed 0..n-1."""
    return Quiver.from_arrows(n, [(i, i + 1, f"a{i + 1}") for i in range(n - 1)],
                              vertex_names=tuple(str(i + 1) for i in range(n)))


def radical_square_zero(quiver: Quiver) -> AlgebraPresentation:
    """kQ/rad^2: every path of length 2 is a relation."""
    pb = PathBasis(quiver)
    rels = [pb.path(p) for p in pb.paths if p.length == 2]
    return AlgebraPresentation(quiver, rels, basis=pb)
