"""
Dimension formulas for (bound) path algebras of species with multiplicities,
species extraction from presentations, and saturation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import CyclicQuiver, MissingExtData
from .homalg import bongartz_ext_pairwise, is_hereditary
from .pathalg import AlgebraPresentation
from .quiver import (Quiver, SpeciesData, enumerate_paths, is_acyclic,
                     longest_path_length, path_dim_E, species_quiver)


@dataclass
class DimReport:
    delta_total: int
    delta_pairs: list
    bound_total: int
    per_path: dict = field(default_factory=dict)   # vertex tuple -> dim E(path)
    ext_corrections: dict = field(default_factory=dict)  # degree -> subtracted total
    exact: bool = True
    reason: str = "hereditary"

    def to_dict(self) -> dict:
        return {
            "delta_total": self.delta_total,
            "delta_pairs": self.delta_pairs,
            "bound_total": self.bound_total,
            "per_path": [{"vertices": list(k), "dim": v} for k, v in self.per_path.items()],
            "ext_corrections": {str(k): v for k, v in self.ext_corrections.items()},
            "exact": self.exact,
            "reason": self.reason,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "DimReport":
        return cls(
            d["delta_total"], [list(r) for r in d["delta_pairs"]], d["bound_total"],
            {tuple(x["vertices"]): x["dim"] for x in d["per_path"]},
            {int(k): v for k, v in d["ext_corrections"].items()},
            d["exact"], d["reason"],
        )


def _species_paths(s: SpeciesData):
    q = species_quiver(s)
    if not is_acyclic(q):
        raise CyclicQuiver("species quiver has an oriented cycle")
    return q, enumerate_paths(q)


def _vertices(q: Quiver, p) -> tuple:
    verts = [p.source]
    for eid in reversed(p.edges):
        verts.append(q.edges[eid].target)
    return tuple(verts)


def hereditary_dim(s: SpeciesData) -> DimReport:
    """Dimension of the path algebra of the species (with multiplicities)."""
    q, paths = _species_paths(s)
    n = s.n_vertices
    pairs = [[0] * n for _ in range(n)]
    per_path = {}
    for p in paths:
        d = path_dim_E(s, p)
        per_path[_vertices(q, p)] = d
        pairs[p.source][p.target] += d
    total = sum(s.m[i] * s.m[j] * pairs[i][j] for i in range(n) for j in range(n))
    return DimReport(total, pairs, total, per_path, {}, True, "hereditary")


def bounded_dim(s: SpeciesData) -> DimReport:
    """Hereditary dimension minus all higher Ext corrections.

    This is an upper bound for dim A in general and exact when the longest
    path in the species quiver is at most 2 or all higher Ext groups vanish.
    """
    her = hereditary_dim(s)
    q = species_quiver(s)
    longest = longest_path_length(q)
    n = s.n_vertices
    if s.ext_higher is None:
        if longest >= 2:
            raise MissingExtData("Ext^2 data are required once the species quiver has paths of length 2")
        ext_higher = {}
    else:
        ext_higher = s.ext_higher
    pairs = [row[:] for row in her.delta_pairs]
    corrections = {}
    for k, mat in ext_higher.items():
        sub = 0
        for i in range(n):
            for j in range(n):
                pairs[i][j] -= mat[i][j]
                sub += s.m[i] * s.m[j] * mat[i][j]
        corrections[k] = sub
    bound = her.delta_total - sum(corrections.values())
    vanishing = all(v == 0 for v in corrections.values())
    if vanishing:
        exact, reason = True, "hereditary"
    elif longest <= 2:
        exact, reason = True, "path length <= 2"
    else:
        exact, reason = False, "estimate only"
    return DimReport(bound, pairs, bound, her.per_path, corrections, exact, reason)


def faithful_module_bound(s: SpeciesData, vdims: Sequence[int]):
    """Bounds from a module V with dim(e_i V) = ``vdims[i]``.

    Returns ``(total_bound, pair_bounds)`` with total (sum vdims)^2 and pair
    (i, j) bounding m_i m_j delta_A(ij) by vdims[i] * vdims[j].  V is meant
    to generate the module category (so vdims[i] >= m_i d_i); that is not
    enforced, a vertex with vdims[i] = 0 just gets zero bounds.
    """
    if len(vdims) != s.n_vertices:
        raise ValueError("need one local dimension per vertex")
    if any(v < 0 for v in vdims):
        raise ValueError("local dimensions must be non-negative")
    total = sum(vdims) ** 2
    pairs = [[a * b for b in vdims] for a in vdims]
    return total, pairs


def extract_species(p: AlgebraPresentation) -> SpeciesData:
    """Basic species of A = kQ/I over Q: d = m = 1, Ext data from Ext formulas."""
    table = bongartz_ext_pairwise(p)
    n = p.n_vertices
    higher = {}
    for k in range(2, table.max_degree + 1):
        mat = table.matrix(k)
        if any(map(any, mat)):
            higher[k] = mat
    return SpeciesData((1,) * n, (1,) * n, table.matrix(1), higher, p.quiver.vertex_names)


def quiver_from_ext1(ext1, names=None, labels_from: Optional[Quiver] = None) -> Quiver:
    """``ext1[i][j]`` parallel edges i -> j (over Q with all d_i = 1).

    When ``labels_from`` has the same edge counts per pair its labels are reused.
    """
    n = len(ext1)
    pool = {}
    if labels_from is not None:
        for e in labels_from.edges:
            pool.setdefault((e.source, e.target), []).append(e.label)
    arrows = []
    for i in range(n):
        for j in range(n):
            labels = pool.get((i, j), [])
            reuse = len(labels) == ext1[i][j]
            for k in range(ext1[i][j]):
                arrows.append((i, j, labels[k] if reuse else None))
    if any(a[2] is None for a in arrows):
        arrows = [(i, j, f"x{k}") for k, (i, j, _) in enumerate(arrows)]
    return Quiver.from_arrows(n, arrows, names)


def saturate(p: AlgebraPresentation) -> AlgebraPresentation:
    """The path algebra of the species of ``p`` (relations dropped)."""
    s = extract_species(p)
    q = quiver_from_ext1(s.ext1, p.quiver.vertex_names, labels_from=p.quiver)
    sat = AlgebraPresentation.path_algebra(q)
    assert sat.n_vertices == p.n_vertices
    assert extract_species(sat).ext1 == s.ext1
    assert is_hereditary(sat)
    assert sat.dim() == hereditary_dim(s).delta_total
    return sat
