"""
Ext dimensions between simple modules of A = kQ/I, computed two ways.

``bongartz_*`` evaluate the closed ideal-arithmetic formulas inside kQ: with
r = rad(kQ) and I the ideal of relations,

    Ext^{2n}   <->  (I^n ∩ r I^{n-1} r) / (I^n r + r I^n)        n >= 1
    Ext^{2n+1} <->  (r I^n ∩ I^n r) / (I^{n+1} + r I^n r)        n >= 0

as K-K-bimodules, so the (source, target) blocks of the quotient give the
pairwise dimensions dim Ext^k(S_source, S_target).

``resolution_ext_oracle`` instead builds a minimal projective resolution of
each simple module from representation data, never touching powers of I.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .errors import CyclicQuiver
from .exactlin import RowSpace, left_kernel, rref
from .pathalg import (AlgebraPresentation, GradedSubspace, dims_by_pair,
                      full_algebra, radical_power)
from .quiver import Path, is_acyclic


@dataclass
class ExtTable:
    """dim_Q Ext^k(S_i, S_j) for k = 0..max_degree."""

    max_degree: int
    n_vertices: int
    entries: dict = field(default_factory=dict)  # k -> n x n list

    def matrix(self, k: int) -> list:
        n = self.n_vertices
        return self.entries.get(k) or [[0] * n for _ in range(n)]

    def total(self, k: int) -> int:
        return sum(map(sum, self.matrix(k)))

    @property
    def totals(self) -> list:
        return [self.total(k) for k in range(self.max_degree + 1)]

    def to_dict(self) -> dict:
        return {"max_degree": self.max_degree, "n_vertices": self.n_vertices,
                "entries": {str(k): self.matrix(k) for k in range(self.max_degree + 1)}}

    @classmethod
    def from_dict(cls, d: dict) -> "ExtTable":
        return cls(d["max_degree"], d["n_vertices"],
                   {int(k): [list(r) for r in v] for k, v in d["entries"].items()})

    def __eq__(self, other):
        if not isinstance(other, ExtTable):
            return NotImplemented
        return (self.max_degree == other.max_degree and self.n_vertices == other.n_vertices
                and all(self.matrix(k) == other.matrix(k) for k in range(self.max_degree + 1)))


def _check(p: AlgebraPresentation):
    if not is_acyclic(p.quiver):
        raise CyclicQuiver("Ext formulas are implemented for acyclic quivers only")


class _Powers:
    """Cached products of r = rad(kQ) and I inside kQ."""

    def __init__(self, p: AlgebraPresentation):
        self.p = p
        self.r = radical_power(p.basis, 1)
        self.one = full_algebra(p.basis)
        self._ipow = {0: self.one, 1: p.ideal}

    def ipow(self, n: int) -> GradedSubspace:
        if n not in self._ipow:
            self._ipow[n] = self.ipow(n - 1) * self.p.ideal
        return self._ipow[n]

    def quotient(self, k: int) -> tuple:
        """(numerator, denominator) subspaces for Ext^k, k >= 1."""
        r = self.r
        if k % 2 == 0:
            n = k // 2
            i_n = self.ipow(n)
            num = i_n & (r * self.ipow(n - 1) * r)
            den = (i_n * r) + (r * i_n)
        else:
            n = (k - 1) // 2
            i_n = self.ipow(n)
            num = (r * i_n) & (i_n * r)
            den = self.ipow(n + 1) + (r * i_n * r)
        return num, den


def _default_degree(p: AlgebraPresentation, max_degree: Optional[int]) -> int:
    return p.basis.longest if max_degree is None else max_degree


def bongartz_ext_pairwise(p: AlgebraPresentation, max_degree: Optional[int] = None) -> ExtTable:
    _check(p)
    max_degree = _default_degree(p, max_degree)
    n = p.n_vertices
    pw = _Powers(p)
    table = ExtTable(max_degree, n)
    table.entries[0] = [[int(i == j) for j in range(n)] for i in range(n)]
    for k in range(1, max_degree + 1):
        num, den = pw.quotient(k)
        mat = [[0] * n for _ in range(n)]
        for (s, t), d in num.quotient_dims(den).items():
            mat[s][t] += d
        table.entries[k] = mat
    return table


def bongartz_ext_dims(p: AlgebraPresentation, max_degree: Optional[int] = None) -> list:
    """Totals dim Ext^k(K, K) for k = 1..max_degree (list index k-1)."""
    t = bongartz_ext_pairwise(p, max_degree)
    return [t.total(k) for k in range(1, t.max_degree + 1)]


# --- representation-theoretic oracle -----------------------------------------

class _Projectives:
    """Indecomposable projectives P_v = A e_v with explicit edge actions.

    The basis of P_v is the set of paths from v whose columns are not pivots
    of the RREF of the ideal block; reduction modulo I is pivot clearing.
    """

    def __init__(self, p: AlgebraPresentation):
        self.p = p
        pb = p.basis
        self.n = p.n_vertices
        self.coords = {}     # v -> list of (target vertex, pair local index)
        self.pos = {}        # v -> {(target, local): position}
        for v in range(self.n):
            cols = []
            for w in range(self.n):
                blk = p.ideal.block((v, w))
                cols.extend((w, c) for c in blk.complement_columns())
            self.coords[v] = cols
            self.pos[v] = {c: k for k, c in enumerate(cols)}
        # action[v][edge_id]: dict position -> {position: coeff}
        self.action = {v: {} for v in range(self.n)}
        for v in range(self.n):
            for e in p.quiver.edges:
                self.action[v][e.id] = self._edge_matrix(v, e)

    def dim(self, v: int) -> int:
        return len(self.coords[v])

    def vertex_of(self, v: int, k: int) -> int:
        return self.coords[v][k][0]

    def _edge_matrix(self, v, e):
        pb = self.p.basis
        mat = {}
        for k, (w, c) in enumerate(self.coords[v]):
            if w != e.source:
                continue
            g = pb.by_pair[(v, w)][c]
            path = pb.paths[g]
            prod = pb._index[(v, e.target, (e.id,) + path.edges)]
            vec = [Fraction(0)] * pb.pair_dim((v, e.target))
            vec[pb.local[prod]] = Fraction(1)
            red = self.p.ideal.block((v, e.target)).reduce(vec)
            mat[k] = {self.pos[v][(e.target, i)]: x for i, x in enumerate(red) if x}
        return mat


class _FreeModule:
    """Direct sum of indecomposable projectives P_{v_0} + P_{v_1} + ..."""

    def __init__(self, proj: _Projectives, tops: list):
        self.proj = proj
        self.tops = list(tops)
        self.offsets = []
        off = 0
        for v in self.tops:
            self.offsets.append(off)
            off += proj.dim(v)
        self.dim = off
        self.vertex = []
        for v in self.tops:
            self.vertex.extend(proj.vertex_of(v, k) for k in range(proj.dim(v)))

    def act(self, edge_id: int, x) -> list:
        out = [Fraction(0)] * self.dim
        for v, off in zip(self.tops, self.offsets):
            mat = self.proj.action[v][edge_id]
            for k, col in mat.items():
                a = x[off + k]
                if a:
                    for j, c in col.items():
                        out[off + j] += a * c
        return out

    def act_path(self, path: Path, x) -> list:
        for eid in reversed(path.edges):
            x = self.act(eid, x)
        return x

    def project(self, x, w: int) -> list:
        return [a if self.vertex[k] == w else Fraction(0) for k, a in enumerate(x)]


def _cover_step(free: _FreeModule, sub: RowSpace, n_vertices: int):
    """Projective cover of the submodule ``sub`` of ``free``.

    Returns (tops, generators) where the generators are vertex-homogeneous
    elements of ``sub`` lifting a basis of sub/rad(sub), chosen in RREF
    order so the result is deterministic.
    """
    q = free.proj.p.quiver
    homog = {w: RowSpace.span(free.dim, [free.project(x, w) for x in sub.basis] or ())
             for w in range(n_vertices)}
    rad_rows = [free.act(e.id, x) for e in q.edges for x in sub.basis]
    rad = RowSpace.span(free.dim, [r for r in rad_rows if any(r)])
    tops, gens = [], []
    for w in range(n_vertices):
        span = rad
        for x in homog[w].basis:
            if not span.contains(x):
                span = span + RowSpace.span(free.dim, [x])
                tops.append(w)
                gens.append(x)
    return tops, gens


def _minimal_resolution_terms(proj: _Projectives, i: int, max_degree: int) -> list:
    """Vertex lists of the projective terms P_0, P_1, ... of S_i."""
    p = proj.p
    pb = p.basis
    n = p.n_vertices
    free = _FreeModule(proj, [i])
    # rad P_i: coordinates of paths of positive length (e_i is never a pivot)
    keep = [k for k, (w, c) in enumerate(proj.coords[i])
            if pb.length_of((i, w), c) >= 1]
    sub = RowSpace.span(free.dim, [[Fraction(int(j == k)) for j in range(free.dim)] for k in keep])
    terms = [[i]]
    for _ in range(max_degree):
        if sub.dim == 0:
            break
        tops, gens = _cover_step(free, sub, n)
        terms.append(tops)
        new_free = _FreeModule(proj, tops)
        images = []
        for v, g in zip(tops, gens):
            for (w, c) in proj.coords[v]:
                path = pb.paths[pb.by_pair[(v, w)][c]]
                images.append(free.act_path(path, g))
        assert RowSpace.span(free.dim, images) == sub, "projective cover is not onto"
        sub = RowSpace(new_free.dim, left_kernel(images, nrows=new_free.dim))
        free = new_free
    return terms


def resolution_ext_oracle(p: AlgebraPresentation, i: int, max_degree: Optional[int] = None) -> list:
    """``dims[k][j] = dim Ext^k(S_i, S_j)`` for k = 0..max_degree.

    Over a basic algebra with End(S_j) = Q, Ext^k(S_i, S_j) has the same
    dimension as the multiplicity of P_j in the k-th term of a minimal
    projective resolution of S_i.
    """
    _check(p)
    max_degree = _default_degree(p, max_degree)
    proj = _projectives(p)
    terms = _minimal_resolution_terms(proj, i, max_degree)
    n = p.n_vertices
    dims = [[0] * n for _ in range(max_degree + 1)]
    for k, tops in enumerate(terms):
        for w in tops:
            dims[k][w] += 1
    return dims


def _projectives(p: AlgebraPresentation) -> _Projectives:
    proj = getattr(p, "_projectives_cache", None)
    if proj is None:
        proj = _Projectives(p)
        p._projectives_cache = proj
    return proj


def resolution_ext_table(p: AlgebraPresentation, max_degree: Optional[int] = None) -> ExtTable:
    """The oracle's answer for every simple, packed as an ExtTable."""
    max_degree = _default_degree(p, max_degree)
    n = p.n_vertices
    table = ExtTable(max_degree, n, {k: [[0] * n for _ in range(n)] for k in range(max_degree + 1)})
    for i in range(n):
        dims = resolution_ext_oracle(p, i, max_degree)
        for k in range(max_degree + 1):
            table.entries[k][i] = dims[k]
    return table


def projective_dimension(p: AlgebraPresentation, i: int) -> int:
    """Length of the minimal projective resolution of S_i."""
    _check(p)
    terms = _minimal_resolution_terms(_projectives(p), i, p.basis.longest + 1)
    return len(terms) - 1


def is_hereditary(p: AlgebraPresentation) -> bool:
    """I = 0; cross-checked against the vanishing of Ext^2(K, K)."""
    verdict = p.ideal.is_zero()
    ext2 = bongartz_ext_dims(p, 2)[1]
    assert verdict == (ext2 == 0), "hereditary criterion disagrees with Ext^2"
    return verdict


def relation_space_dims(p: AlgebraPresentation) -> list:
    """Per-pair dimensions of I / (I r + r I).

    When rad(kQ)^3 = 0 these equal the dimensions of I itself, which is
    asserted.
    """
    _check(p)
    r = p.radical
    num = p.ideal
    den = (num * r) + (r * num)
    n = p.n_vertices
    mat = [[0] * n for _ in range(n)]
    for (s, t), d in num.quotient_dims(den).items():
        mat[s][t] += d
    if p.basis.longest <= 2:
        assert mat == dims_by_pair(num)[0], "relations of a rad^3 = 0 algebra are not minimal"
    return mat


@dataclass(frozen=True)
class GlobalDim:
    bound: int
    exact: int


def global_dim_upper(p: AlgebraPresentation) -> GlobalDim:
    """Radical-length bound on gldim together with the exact value.

    The bound is the least n with rad(kQ)^{n+1} = 0, i.e. the longest path
    length; the exact value is the largest projective dimension of a simple.
    """
    _check(p)
    bound = p.basis.longest
    exact = max((projective_dimension(p, i) for i in range(p.n_vertices)), default=0)
    assert exact <= max(bound, 0)
    return GlobalDim(bound, exact)
