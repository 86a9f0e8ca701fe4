import random
from fractions import Fraction

import pytest

from specalc.errors import BasisMismatch, NonAdmissible, RelationSyntaxError
from specalc.exactlin import RowSpace
from specalc.pathalg import (AlgebraPresentation, AlgElement, GradedSubspace, PathBasis,
                             dims_by_pair, full_algebra, ideal_product, linear_quiver,
                             multiply, parse_relation, radical_power, two_sided_ideal)
from specalc.quiver import Quiver
from specalc.randgen import random_presentation, random_relations, random_acyclic_quiver


def brute_force_ideal(pb, gens):
    """Span of every path * g * path, collected per (source, target)."""
    rows = {}
    for g in gens:
        for left in range(len(pb)):
            for right in range(len(pb)):
                x = multiply(multiply(pb.path(pb.paths[left]), g), pb.path(pb.paths[right]))
                if not x.is_zero():
                    pair, vec = x.pair_vector()
                    rows.setdefault(pair, []).append(vec)
    return {p: RowSpace.span(pb.pair_dim(p), r).dim for p, r in rows.items()}


def test_multiply_examples(ex_dim):
    pb = ex_dim.basis
    e0 = pb.vertex(0)
    assert e0 * e0 == e0
    a, b, c = pb.edge("a"), pb.edge("b"), pb.edge("c")
    ba = b * a
    assert not ba.is_zero() and repr(ba) == "1*b*a"
    assert (b * c).is_zero()
    assert (a + c) * e0 == a + c
    assert pb.vertex(1) * (a + c) == a


def test_basis_mismatch(ex_dim, a4_rel):
    with pytest.raises(BasisMismatch):
        ex_dim.basis.vertex(0) * a4_rel.basis.vertex(0)


def test_radical_power_examples(ex_dim):
    pb = ex_dim.basis
    assert radical_power(pb, 0) == full_algebra(pb)
    r2 = radical_power(pb, 2)
    assert r2.dim == 2 and r2.contains(pb.edge("b") * pb.edge("a")) and r2.contains(pb.edge("d") * pb.edge("c"))
    a4 = PathBasis(linear_quiver(4))
    r3 = radical_power(a4, 3)
    assert r3.dim == 1 and r3.contains(a4.edge("a3") * a4.edge("a2") * a4.edge("a1"))


def test_two_sided_ideal_examples(ex_dim, square_rel):
    assert two_sided_ideal(ex_dim.basis, []).is_zero()
    assert square_rel.ideal.dim == 1
    for n in range(3, 9):
        p = AlgebraPresentation(linear_quiver(n), ["a2*a1"])
        assert p.ideal.dim == n - 2


def test_ideal_product_examples(a4_rel):
    pb = a4_rel.basis
    zero = GradedSubspace(pb)
    assert (a4_rel.ideal * zero).is_zero()
    r = radical_power(pb, 1)
    assert r * r == radical_power(pb, 2)
    ri = ideal_product(r, a4_rel.ideal)
    assert ri.dim == 1 and ri.contains(pb.edge("a3") * pb.edge("a2") * pb.edge("a1"))


def test_dims_by_pair_examples(ex_dim, square_rel):
    mat, total = dims_by_pair(full_algebra(ex_dim.basis))
    assert total == 10 and mat[0][3] == 2
    assert dims_by_pair(GradedSubspace(ex_dim.basis)) == ([[0] * 4 for _ in range(4)], 0)
    assert square_rel.dim() == 9 and square_rel.dims_by_pair()[0][3] == 1


def test_parse_relation(square_rel):
    pb = square_rel.basis
    x = parse_relation("b*a - 2/3*d*c", pb)
    assert x == pb.edge("b") * pb.edge("a") - Fraction(2, 3) * (pb.edge("d") * pb.edge("c"))
    assert parse_relation("-b*a+3*d*c", pb) == -(pb.edge("b") * pb.edge("a")) + 3 * (pb.edge("d") * pb.edge("c"))
    with pytest.raises(RelationSyntaxError):
        parse_relation("a*b", pb)
    with pytest.raises(RelationSyntaxError):
        parse_relation("b*z", pb)


def test_relation_words_round_trip(square_rel):
    p = AlgebraPresentation(square_rel.quiver, ["-b*a + 2/3*d*c"])
    again = AlgebraPresentation(p.quiver, p.relation_words(), basis=p.basis)
    assert again.relations == p.relations


@pytest.mark.parametrize("rel", ["a", "2*c", "b*a + a"])
def test_non_admissible_rejected(ex_dim, rel):
    with pytest.raises((NonAdmissible, RelationSyntaxError)):
        AlgebraPresentation(ex_dim.quiver, [rel])


def test_inhomogeneous_pair_rejected(ex_dim):
    with pytest.raises(NonAdmissible):
        AlgebraPresentation(ex_dim.quiver, ["b*a"], basis=None)  # fine
        pb = ex_dim.basis
        AlgebraPresentation(ex_dim.quiver, [pb.edge("b") * pb.edge("a") + pb.edge("d")], basis=pb)


def test_mixed_length_relations():
    # 0 -> 1 -> 2 -> 3 plus a shortcut 0 -> 2 -> ... : relation mixing lengths 2 and 3
    q = Quiver.from_arrows(4, [(0, 1, "a"), (1, 2, "b"), (2, 3, "c"), (0, 2, "s"), (1, 3, "t")])
    p = AlgebraPresentation(q, ["c*b*a - c*s", "t*a - c*s"])
    pb = p.basis
    assert p.ideal.dim == brute_force_ideal_total(pb, p.relations)


def brute_force_ideal_total(pb, gens):
    return sum(brute_force_ideal(pb, gens).values())


@pytest.mark.parametrize("seed", range(60))
def test_ideal_matches_brute_force(seed):
    p = random_presentation(random.Random(seed), max_vertices=5, max_edges=7)
    expected = brute_force_ideal(p.basis, p.relations)
    got = {pair: rs.dim for pair, rs in p.ideal.blocks.items()}
    assert got == {k: v for k, v in expected.items() if v}


@pytest.mark.parametrize("seed", range(30))
def test_ideal_is_closed_under_edges(seed):
    p = random_presentation(random.Random(seed))
    pb = p.basis
    edges = [pb.edge(e.id) for e in p.quiver.edges]
    for w in p.ideal.elements():
        for x in edges:
            assert p.ideal.contains(x * w)
            assert p.ideal.contains(w * x)
    assert p.ideal <= radical_power(pb, 2)


@pytest.mark.parametrize("seed", range(30))
def test_associativity(seed):
    rng = random.Random(seed)
    pb = PathBasis(random_acyclic_quiver(rng, 5, 8))

    def rand_elem():
        ks = rng.sample(range(len(pb)), min(len(pb), rng.randint(1, 5)))
        return AlgElement(pb, {k: Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for k in ks})

    a, b, c = rand_elem(), rand_elem(), rand_elem()
    assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("seed", range(20))
def test_radical_powers_multiply(seed):
    pb = PathBasis(random_acyclic_quiver(random.Random(seed), 6, 8))
    for n in range(0, 3):
        for m in range(0, 3):
            assert radical_power(pb, n) * radical_power(pb, m) == radical_power(pb, n + m)
    assert dims_by_pair(full_algebra(pb))[1] == len(pb.paths)


@pytest.mark.parametrize("seed", range(20))
def test_dim_identity(seed):
    p = random_presentation(random.Random(seed))
    assert p.dim() == len(p.basis) - p.ideal.dim
    assert sum(map(sum, p.dims_by_pair())) == p.dim()
