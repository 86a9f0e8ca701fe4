"""
Quivers, paths and species given by dimension data.

Paths are written as in the usual composition of maps: a path ``e1 e2 ... en``
traverses ``en`` first.  ``Path.edges`` stores edge ids in that written order,
so ``edges[-1]`` leaves ``source`` and ``edges[0]`` arrives at ``target``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Iterable, Optional, Sequence

from .errors import CyclicQuiver, InconsistentInput, NonIntegralDim


@dataclass(frozen=True)
class Edge:
    id: int
    source: int
    target: int
    label: Optional[str] = None

    @property
    def name(self) -> str:
        return self.label if self.label is not None else f"x{self.id}"


@dataclass(frozen=True)
class Quiver:
    n_vertices: int
    edges: tuple = ()
    vertex_names: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        for k, e in enumerate(self.edges):
            if e.id != k:
                raise InconsistentInput(f"edge ids must be 0..{len(self.edges) - 1}, got {e.id} at {k}")
            if not (0 <= e.source < self.n_vertices and 0 <= e.target < self.n_vertices):
                raise InconsistentInput(f"edge {e.id} has an endpoint outside 0..{self.n_vertices - 1}")
        labels = [e.label for e in self.edges if e.label is not None]
        if len(labels) != len(set(labels)):
            raise InconsistentInput("edge labels must be unique")
        if self.vertex_names is not None:
            object.__setattr__(self, "vertex_names", tuple(self.vertex_names))
            if len(self.vertex_names) != self.n_vertices:
                raise InconsistentInput("vertex_names has the wrong length")

    @classmethod
    def from_arrows(cls, n_vertices: int, arrows: Iterable[tuple], vertex_names=None) -> "Quiver":
        """Build from ``(source, target)`` or ``(source, target, label)`` tuples."""
        edges = []
        for k, a in enumerate(arrows):
            label = a[2] if len(a) > 2 else None
            edges.append(Edge(k, a[0], a[1], label))
        return cls(n_vertices, tuple(edges), vertex_names)

    def vertex_name(self, v: int) -> str:
        return str(self.vertex_names[v]) if self.vertex_names else str(v)

    def edge_by_label(self, label: str) -> Edge:
        for e in self.edges:
            if e.name == label:
                return e
        raise KeyError(label)

    def adjacency(self) -> list:
        """Edge-count matrix, entry ``[i][j]`` = number of edges i -> j."""
        adj = [[0] * self.n_vertices for _ in range(self.n_vertices)]
        for e in self.edges:
            adj[e.source][e.target] += 1
        return adj

    def out_edges(self, v: int) -> list:
        return [e for e in self.edges if e.source == v]

    def in_edges(self, v: int) -> list:
        return [e for e in self.edges if e.target == v]


@dataclass(frozen=True)
class Path:
    source: int
    target: int
    edges: tuple = ()

    @property
    def length(self) -> int:
        return len(self.edges)

    def word(self, q: Quiver) -> str:
        if not self.edges:
            return f"e{q.vertex_name(self.source)}"
        return "*".join(q.edges[i].name for i in self.edges)


def is_acyclic(q: Quiver) -> bool:
    # Kahn's algorithm; a loop makes a vertex its own predecessor
    indeg = [0] * q.n_vertices
    for e in q.edges:
        indeg[e.target] += 1
    stack = [v for v in range(q.n_vertices) if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for e in q.out_edges(v):
            indeg[e.target] -= 1
            if indeg[e.target] == 0:
                stack.append(e.target)
    return seen == q.n_vertices


def topological_order(q: Quiver) -> list:
    if not is_acyclic(q):
        raise CyclicQuiver("quiver has an oriented cycle")
    indeg = [0] * q.n_vertices
    for e in q.edges:
        indeg[e.target] += 1
    ready = sorted(v for v in range(q.n_vertices) if indeg[v] == 0)
    order = []
    while ready:
        v = ready.pop(0)
        order.append(v)
        for e in q.out_edges(v):
            indeg[e.target] -= 1
            if indeg[e.target] == 0:
                ready.append(e.target)
        ready.sort()
    return order


def enumerate_paths(q: Quiver, max_len: Optional[int] = None) -> list:
    """All paths of length <= max_len (all paths when max_len is None).

    Sorted by (source, target, length, edge ids).
    """
    if max_len is None and not is_acyclic(q):
        raise CyclicQuiver("unbounded path enumeration needs an acyclic quiver")
    paths = [Path(v, v, ()) for v in range(q.n_vertices)]
    frontier = list(paths)
    length = 0
    while frontier and (max_len is None or length < max_len):
        nxt = []
        for p in frontier:
            for e in q.out_edges(p.target):
                nxt.append(Path(p.source, e.target, (e.id,) + p.edges))
        paths.extend(nxt)
        frontier = nxt
        length += 1
    paths.sort(key=lambda p: (p.source, p.target, p.length, p.edges[::-1]))
    return paths


def longest_path_length(q: Quiver) -> int:
    order = topological_order(q)
    best = [0] * q.n_vertices
    for v in order:
        for e in q.out_edges(v):
            best[e.target] = max(best[e.target], best[v] + 1)
    return max(best, default=0)


@dataclass(frozen=True)
class SpeciesData:
    """Numerical shadow of a species with multiplicities.

    ``ext1[i][j]`` is dim_Q Ext^1(S_i, S_j); a nonzero entry gives an edge
    i -> j in the species quiver.  ``ext_higher`` maps a degree k >= 2 to the
    matrix of dim_Q Ext^k(S_i, S_j).  ``ext_higher=None`` means "not supplied";
    an empty dict means "supplied, all zero".
    """

    d: tuple
    m: tuple
    ext1: tuple
    ext_higher: Optional[dict] = None
    names: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(int(x) for x in self.d))
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        object.__setattr__(self, "ext1", _square(self.ext1, len(self.d), "ext1"))
        n = len(self.d)
        if len(self.m) != n:
            raise InconsistentInput("d and m have different lengths")
        if any(x <= 0 for x in self.d + self.m):
            raise InconsistentInput("d and m entries must be positive")
        if self.ext_higher is not None:
            eh = {int(k): _square(v, n, f"ext_higher[{k}]") for k, v in self.ext_higher.items()}
            if any(k < 2 for k in eh):
                raise InconsistentInput("ext_higher degrees must be >= 2")
            object.__setattr__(self, "ext_higher", dict(sorted(eh.items())))
        if self.names is not None:
            object.__setattr__(self, "names", tuple(self.names))

    @property
    def n_vertices(self) -> int:
        return len(self.d)

    def ext(self, k: int) -> tuple:
        """Ext^k matrix; zero when absent from supplied data."""
        if k == 1:
            return self.ext1
        n = self.n_vertices
        if self.ext_higher and k in self.ext_higher:
            return self.ext_higher[k]
        return tuple((0,) * n for _ in range(n))


def _square(mat, n, what) -> tuple:
    out = tuple(tuple(int(x) for x in row) for row in mat)
    if len(out) != n or any(len(r) != n for r in out):
        raise InconsistentInput(f"{what} must be {n}x{n}")
    if any(x < 0 for r in out for x in r):
        raise InconsistentInput(f"{what} entries must be non-negative")
    return out


def species_quiver(s: SpeciesData) -> Quiver:
    """One edge i -> j per nonzero ext1 entry (parallel extensions collapse)."""
    arrows = [(i, j) for i in range(s.n_vertices) for j in range(s.n_vertices) if s.ext1[i][j] > 0]
    return Quiver.from_arrows(s.n_vertices, arrows, s.names)


def path_dim_E(s: SpeciesData, gamma: Path) -> int:
    """Q-dimension of the tensor product of bimodules along ``gamma``.

    ``gamma`` must be a path in ``species_quiver(s)``, or any path given by
    its vertex sequence through :func:`vertex_sequence`.
    """
    verts = vertex_sequence(species_quiver(s), gamma)
    return _dim_along(s, verts)


def vertex_sequence(q: Quiver, gamma: Path) -> list:
    verts = [gamma.source]
    for eid in reversed(gamma.edges):
        e = q.edges[eid]
        if e.source != verts[-1]:
            raise InconsistentInput("edge sequence is not a path")
        verts.append(e.target)
    if verts[-1] != gamma.target:
        raise InconsistentInput("path does not end at its target")
    return verts


def _dim_along(s: SpeciesData, verts: Sequence[int]) -> int:
    if len(verts) == 1:
        return s.d[verts[0]]
    num = prod(s.ext1[a][b] for a, b in zip(verts, verts[1:]))
    den = prod(s.d[v] for v in verts[1:-1])
    if num % den:
        raise NonIntegralDim(f"tensor dimension {num}/{den} along {verts} is not an integer")
    return num // den
