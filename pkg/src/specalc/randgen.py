"""Seeded random acyclic quivers and admissible presentations for testing."""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .pathalg import AlgebraPresentation, AlgElement, PathBasis
from .quiver import Quiver


def random_acyclic_quiver(rng: random.Random, max_vertices: int = 6, max_edges: int = 8,
                          min_vertices: int = 1) -> Quiver:
    n = rng.randint(min_vertices, max_vertices)
    n_edges = rng.randint(0, max_edges) if n > 1 else 0
    order = list(range(n))
    rng.shuffle(order)
    arrows = []
    for k in range(n_edges):
        i, j = sorted(rng.sample(range(n), 2))
        arrows.append((order[i], order[j], f"x{k}"))
    return Quiver.from_arrows(n, arrows)


def random_relations(rng: random.Random, pb: PathBasis, max_gens: int = 3) -> list:
    """Up to ``max_gens`` random (source, target)-homogeneous elements of rad^2."""
    long_pairs = {}
    for k, p in enumerate(pb.paths):
        if p.length >= 2:
            long_pairs.setdefault((p.source, p.target), []).append(k)
    if not long_pairs:
        return []
    gens = []
    for _ in range(rng.randint(0, max_gens)):
        pair = rng.choice(sorted(long_pairs))
        idx = long_pairs[pair]
        chosen = rng.sample(idx, rng.randint(1, len(idx)))
        coeffs = {k: Fraction(rng.choice([-2, -1, 1, 1, 2, 3])) for k in chosen}
        gens.append(AlgElement(pb, coeffs))
    return gens


def random_presentation(rng: random.Random, max_vertices: int = 6, max_edges: int = 8,
                        max_gens: int = 3, longest: Optional[int] = None,
                        min_longest: int = 0) -> AlgebraPresentation:
    """Random admissible presentation.

    ``longest`` pins the longest path length exactly; ``min_longest`` gives a
    lower bound.  Both are met by rejection sampling.
    """
    for _ in range(10000):
        q = random_acyclic_quiver(rng, max_vertices, max_edges)
        pb = PathBasis(q)
        if longest is not None and pb.longest != longest:
            continue
        if pb.longest < min_longest:
            continue
        return AlgebraPresentation(q, random_relations(rng, pb, max_gens), basis=pb)
    raise RuntimeError("could not sample a presentation with the requested shape")
