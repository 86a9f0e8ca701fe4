"""
Period-space dimension calculators for categories of motives.

``generic_period_dim`` evaluates the general bound from a species with
multiplicities; ``one_motive_dims`` is the six-term decomposition for a
1-motive [L -> G] with lattice, torus and simple abelian parts.

Ext^1 dimensions attached to an abelian part are given over its endomorphism
skew field D (of Q-dimension d); they are multiplied by d to get Q-dimensions.
"""
from __future__ import annotations

import warnings
from dataclasses import asdict, dataclass, field

from .dimforms import DimReport, bounded_dim
from .errors import BoundViolation, InconsistentInput
from .quiver import SpeciesData


@dataclass(frozen=True)
class AbelianPart:
    g: int
    d: int
    ext1_Q0_A: int = 0
    ext1_A_Q1: int = 0

    @property
    def multiplicity(self) -> int:
        return 2 * self.g // self.d


@dataclass(frozen=True)
class OneMotiveInput:
    has_lattice: bool = False
    has_torus: bool = False
    lattice_rank: int = 0
    torus_rank: int = 0
    abelian_parts: tuple = ()
    ext1_Q0_Q1: int = 0
    ext2_Q0_Q1: int = 0

    def __post_init__(self):
        parts = tuple(a if isinstance(a, AbelianPart) else AbelianPart(**a) for a in self.abelian_parts)
        object.__setattr__(self, "abelian_parts", parts)
        counts = [self.lattice_rank, self.torus_rank, self.ext1_Q0_Q1, self.ext2_Q0_Q1]
        for a in parts:
            counts += [a.g, a.ext1_Q0_A, a.ext1_A_Q1]
            if a.d <= 0 or a.g <= 0:
                raise InconsistentInput("abelian parts need g >= 1 and d >= 1")
            if (2 * a.g) % a.d:
                raise InconsistentInput(f"d = {a.d} does not divide 2g = {2 * a.g}")
        if any(c < 0 for c in counts):
            raise InconsistentInput("all counts must be non-negative")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["abelian_parts"] = [asdict(a) for a in self.abelian_parts]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "OneMotiveInput":
        d = dict(d)
        d.pop("format", None)
        d["abelian_parts"] = tuple(AbelianPart(**a) for a in d.get("abelian_parts", ()))
        return cls(**d)

    def effective(self) -> "OneMotiveInput":
        """Copy with Ext data towards absent Q(0) / Q(1) vertices set to zero."""
        dropped = []
        parts = []
        for a in self.abelian_parts:
            x = a.ext1_Q0_A if self.has_lattice else 0
            y = a.ext1_A_Q1 if self.has_torus else 0
            if (x, y) != (a.ext1_Q0_A, a.ext1_A_Q1):
                dropped.append("abelian Ext^1")
            parts.append(AbelianPart(a.g, a.d, x, y))
        both = self.has_lattice and self.has_torus
        e1 = self.ext1_Q0_Q1 if both else 0
        e2 = self.ext2_Q0_Q1 if both else 0
        if (e1, e2) != (self.ext1_Q0_Q1, self.ext2_Q0_Q1):
            dropped.append("Ext(Q(0), Q(1))")
        if dropped:
            warnings.warn(f"ignoring {', '.join(dropped)} data attached to an absent vertex", stacklevel=3)
        return OneMotiveInput(self.has_lattice, self.has_torus, self.lattice_rank, self.torus_rank,
                              tuple(parts), e1, e2)


@dataclass(frozen=True)
class PeriodDimReport:
    delta_alg: int
    delta_2: int
    delta_Ta: int
    delta_3: int
    delta_inc2: int
    delta_inc3: int

    @property
    def total(self) -> int:
        return sum(self.vector)

    @property
    def vector(self) -> tuple:
        return (self.delta_alg, self.delta_2, self.delta_Ta, self.delta_3, self.delta_inc2, self.delta_inc3)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["total"] = self.total
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "PeriodDimReport":
        d = {k: v for k, v in d.items() if k not in ("total", "format")}
        return cls(**d)


def one_motive_dims(inp: OneMotiveInput) -> PeriodDimReport:
    inp = inp.effective()
    parts = inp.abelian_parts
    delta_2 = sum(4 * a.g * a.g // a.d for a in parts)
    delta_3 = sum(2 * a.g * a.ext1_A_Q1 for a in parts)
    delta_inc2 = sum(2 * a.g * a.ext1_Q0_A for a in parts)
    delta_inc3 = (inp.ext1_Q0_Q1 - inp.ext2_Q0_Q1
                  + sum(a.d * a.ext1_Q0_A * a.ext1_A_Q1 for a in parts))
    if delta_inc3 < 0:
        raise InconsistentInput(f"Ext data give a negative delta_inc3 = {delta_inc3}")
    bound = inp.lattice_rank * inp.torus_rank
    if delta_inc3 > bound:
        warnings.warn(f"delta_inc3 = {delta_inc3} exceeds l*t = {bound}; Ext data are inconsistent",
                      BoundViolation, stacklevel=2)
    return PeriodDimReport(int(inp.has_lattice), delta_2, int(inp.has_torus), delta_3, delta_inc2, delta_inc3)


def one_motive_to_species(inp: OneMotiveInput) -> SpeciesData:
    """Species of <M>: vertices Q(0) (if lattice), the abelian parts, Q(1) (if torus)."""
    inp = inp.effective()
    names, d, m = [], [], []
    if inp.has_lattice:
        names.append("Q(0)"), d.append(1), m.append(1)
    for k, a in enumerate(inp.abelian_parts):
        names.append(f"A{k + 1}"), d.append(a.d), m.append(a.multiplicity)
    if inp.has_torus:
        names.append("Q(1)"), d.append(1), m.append(1)
    n = len(names)
    ext1 = [[0] * n for _ in range(n)]
    ext2 = [[0] * n for _ in range(n)]
    first = 1 if inp.has_lattice else 0
    last = n - 1
    for k, a in enumerate(inp.abelian_parts):
        v = first + k
        if inp.has_lattice:
            ext1[0][v] = a.d * a.ext1_Q0_A
        if inp.has_torus:
            ext1[v][last] = a.d * a.ext1_A_Q1
    if inp.has_lattice and inp.has_torus:
        ext1[0][last] = inp.ext1_Q0_Q1
        ext2[0][last] = inp.ext2_Q0_Q1
    return SpeciesData(d, m, ext1, {2: ext2}, names)


@dataclass
class PeriodBreakdown:
    total: int
    vertex_terms: int
    path_terms: dict     # path length -> contribution
    ext_corrections: dict
    report: DimReport = field(repr=False, default=None)


def generic_period_dim(s: SpeciesData) -> PeriodBreakdown:
    """sum m_i^2 d_i + sum over paths m_i m_j dim E(path) - sum_k m_i m_j dim Ext^k."""
    rep = bounded_dim(s)
    vertex_terms = 0
    path_terms = {}
    for verts, dim in rep.per_path.items():
        i, j = verts[0], verts[-1]
        term = s.m[i] * s.m[j] * dim
        if len(verts) == 1:
            vertex_terms += term
        else:
            path_terms[len(verts) - 1] = path_terms.get(len(verts) - 1, 0) + term
    total = vertex_terms + sum(path_terms.values()) - sum(rep.ext_corrections.values())
    assert total == rep.bound_total
    return PeriodBreakdown(total, vertex_terms, path_terms, rep.ext_corrections, rep)
