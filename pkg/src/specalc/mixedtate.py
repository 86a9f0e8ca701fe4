"""
Dimension counts for path algebras attached to Mixed Tate Motives over a ring
of S-integers O_F[1/S].

The quiver has vertices 0..n and e_{j-i} parallel edges i -> j, where e_m is
the Q-dimension of Ext^1(Q(0), Q(m)) from Borel's rank computation.  All
outputs are upper bounds for period-space dimensions (equality is the Period
Conjecture).
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from math import gcd
from typing import Optional, Sequence

from .errors import InconsistentInput
from .quiver import Quiver

UPPER_BOUND_NOTE = "upper bound (equality <=> Period Conjecture)"


@dataclass(frozen=True)
class FieldParams:
    r1: int
    r2: int
    s: int = 0

    def __post_init__(self):
        if min(self.r1, self.r2, self.s) < 0:
            raise InconsistentInput("r1, r2, s must be non-negative")
        if self.r1 + 2 * self.r2 < 1:
            raise InconsistentInput("a number field has r1 + 2*r2 >= 1")


RATIONALS = FieldParams(1, 0, 0)


def borel_dims(fp: FieldParams, max_m: int) -> list:
    """``[e_1, ..., e_max_m]``."""
    out = []
    for m in range(1, max_m + 1):
        if m == 1:
            out.append(fp.r1 + fp.r2 + fp.s - 1)
        elif m % 2 == 0:
            out.append(fp.r2)
        else:
            out.append(fp.r1 + fp.r2)
    return out


def path_counts(e: Sequence[int], max_m: int, fp: Optional[FieldParams] = None) -> list:
    """Number of paths 0 -> m for m = 0..max_m, from ``e = [e_1, e_2, ...]``.

    With ``fp`` given, the three-term recursion
    p_m = e_1 p_{m-1} + (r_2 + 1) p_{m-2} + (1 - |S|) p_{m-3}
    is checked for every m >= 3 (it needs e_3 - e_1 = 1 - |S|, and fails at
    m = 2 where the periodicity of e has not kicked in yet).
    """
    if len(e) < max_m:
        raise ValueError(f"need e_1..e_{max_m}, got {len(e)} values")
    p = [1]
    for m in range(1, max_m + 1):
        p.append(sum(p[i] * e[m - i - 1] for i in range(m)))
    if fp is not None:
        e1 = e[0] if e else 0
        for m in range(3, max_m + 1):
            three = e1 * p[m - 1] + (fp.r2 + 1) * p[m - 2] + (1 - fp.s) * p[m - 3]
            assert p[m] == three, f"three-term recursion fails at m={m}"
    return p


@dataclass(frozen=True)
class DimB:
    dim: int
    first_difference: int
    second_difference: int


def dim_B(p: Sequence[int], n: int) -> DimB:
    """dim B_n = sum_m p_m (n - m + 1) and its first two differences in n."""
    if len(p) < n + 1:
        raise ValueError(f"need p_0..p_{n}")

    def total(k):
        return sum(p[m] * (k - m + 1) for m in range(k + 1)) if k >= 0 else 0

    dim = total(n)
    first = dim - total(n - 1)
    second = first - (total(n - 1) - total(n - 2))
    assert first == sum(p[: n + 1])
    assert second == p[n]
    return DimB(dim, first, second)


def zagier_d(max_n: int) -> list:
    """d_0..d_max_n with d_n = d_{n-2} + d_{n-3}, starting 1, 0, 1."""
    d = [1, 0, 1][: max_n + 1]
    for n in range(3, max_n + 1):
        d.append(d[n - 2] + d[n - 3])
    return d


def projective_dims(p: Sequence[int], n: int) -> list:
    """dim P_i^(n) = sum_{j <= n-i} p_j for i = 0..n."""
    return [sum(p[: n - i + 1]) for i in range(n + 1)]


def ev_odd_split(n: int, p: Optional[Sequence[int]] = None) -> tuple:
    """(dim B_n^ev, dim B_n^odd) over Z (or for a supplied path-count list)."""
    if p is None:
        p = path_counts(borel_dims(RATIONALS, max(n, 1)), n)
    dims = projective_dims(p, n)
    ev = sum(dims[0::2])
    odd = sum(dims[1::2])
    return ev, odd


def euler_phi(n: int) -> int:
    result, m, f = n, n, 2
    while f * f <= m:
        if m % f == 0:
            while m % f == 0:
                m //= f
            result -= result // f
        f += 1
    if m > 1:
        result -= result // m
    return result


def min_cyclotomic_params(m: int) -> tuple:
    """Smallest N with phi(N)/2 > m, returned as (FieldParams(0, phi(N)/2, 0), N).

    Q(mu_N) is totally imaginary for N >= 3, which is where the search starts.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    n = 3
    while euler_phi(n) // 2 <= m:
        n += 1
    return FieldParams(0, euler_phi(n) // 2, 0), n


def mtm_quiver(fp: FieldParams, n: int) -> Quiver:
    """Vertices 0..n with e_{j-i} parallel edges i -> j."""
    e = borel_dims(fp, max(n, 1))
    arrows = []
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            arrows.extend((i, j) for _ in range(e[j - i - 1]))
    return Quiver.from_arrows(n + 1, arrows, vertex_names=tuple(f"Q({i})" for i in range(n + 1)))


@dataclass
class MtmReport:
    n: int
    e: list
    p: list
    dimB: list
    ev: Optional[list] = None
    odd: Optional[list] = None
    d: Optional[list] = None
    note: str = UPPER_BOUND_NOTE

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "MtmReport":
        d = {k: v for k, v in d.items() if k != "format"}
        return cls(**d)


def mtm_report(fp: FieldParams, n: int) -> MtmReport:
    e = borel_dims(fp, max(n, 1))
    p = path_counts(e, n, fp)
    dimB = [dim_B(p, k).dim for k in range(n + 1)]
    rep = MtmReport(n, e[:n], p, dimB)
    if fp == RATIONALS:
        pairs = [ev_odd_split(k, p) for k in range(n + 1)]
        rep.ev = [a for a, _ in pairs]
        rep.odd = [b for _, b in pairs]
        rep.d = zagier_d(n)
    return rep
