"""Acceptance criteria, one test each.  Every test prints a PASS/FAIL line."""
import random
import time
from contextlib import contextmanager
from math import comb

import pytest

from specalc import io
from specalc.dimforms import bounded_dim, extract_species, hereditary_dim, saturate
from specalc.homalg import (bongartz_ext_pairwise, global_dim_upper, is_hereditary,
                            resolution_ext_oracle)
from specalc.mixedtate import (RATIONALS, FieldParams, borel_dims, dim_B, ev_odd_split,
                               mtm_quiver, path_counts, zagier_d)
from specalc.motives import (OneMotiveInput, generic_period_dim, one_motive_dims,
                             one_motive_to_species)
from specalc.pathalg import (AlgebraPresentation, PathBasis, dims_by_pair, full_algebra,
                             linear_quiver, radical_square_zero)
from specalc.randgen import random_presentation


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(number, title, limit):
        start = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            ok = ok and elapsed < limit
            with capsys.disabled():
                print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} "
                      f"({elapsed:.2f}s, limit {limit}s)")
        assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
    return run


def test_1_mtm_goldens(criterion):
    with criterion(1, "MTM over Z goldens", 1):
        p = path_counts(borel_dims(RATIONALS, 14), 14, RATIONALS)
        assert p == [1, 0, 0, 1, 0, 1, 1, 1, 2, 2, 3, 4, 5, 7, 9]
        assert zagier_d(13) == [1, 0, 1, 1, 1, 2, 2, 3, 4, 5, 7, 9, 12, 16]
        assert dim_B(p, 9).dim == 35
        assert ev_odd_split(9) == (20, 15)


def test_2_zagier_identities(criterion):
    with criterion(2, "p_{n+3} = d_n and odd(n) = ev(n-1)", 1):
        p = path_counts(borel_dims(RATIONALS, 43), 43, RATIONALS)
        d = zagier_d(40)
        assert all(p[n + 3] == d[n] for n in range(41))
        splits = [ev_odd_split(n, p) for n in range(41)]
        assert all(splits[n][1] == splits[n - 1][0] for n in range(1, 41))


def test_3_square_example(criterion):
    with criterion(3, "square quiver example, tau = 0, 1, 2 and relation ba - dc", 1):
        for tau in range(3):
            kq = io.presentation_from_dict(io.load_fixture(f"square_tau{tau}"))
            mat, total = dims_by_pair(full_algebra(kq.basis))
            assert total == 10 + tau and mat[0][3] == 2 + tau
        a = io.presentation_from_dict(io.load_fixture("square_commutative"))
        assert a.dim() == 9 and a.dims_by_pair()[0][3] == 1
        ext2 = bongartz_ext_pairwise(a).matrix(2)
        assert ext2[0][3] == 1 and sum(map(sum, ext2)) == 1
        assert is_hereditary(a) is False


def test_4_linear_families(criterion):
    with criterion(4, "linear A_n families, n = 4..8", 5):
        for n in range(4, 9):
            assert AlgebraPresentation(linear_quiver(n), ["a2*a1"]).dim() == comb(n + 1, 2) - (n - 2)
            b = radical_square_zero(linear_quiver(n))
            assert b.dim() == 2 * n - 1
            table = bongartz_ext_pairwise(b)
            assert all(table.total(l) == n - l for l in range(2, n))
            assert global_dim_upper(b).exact == n - 1
            rep = bounded_dim(extract_species(b))
            assert rep.bound_total == b.dim()


def test_5_oracle_equivalence(criterion):
    with criterion(5, "ideal formulas = minimal resolutions on 250 random presentations", 60):
        rng = random.Random(20240501)
        for _ in range(250):
            p = random_presentation(rng, max_vertices=6, max_edges=8, max_gens=3)
            table = bongartz_ext_pairwise(p)
            for i in range(p.n_vertices):
                oracle = resolution_ext_oracle(p, i, table.max_degree)
                for k in range(table.max_degree + 1):
                    assert table.matrix(k)[i] == oracle[k]
            assert p.dim() == len(PathBasis(p.quiver)) - p.ideal.dim


def test_6_estimate_exactness(criterion):
    with criterion(6, "species estimate exact for longest path 2, an upper bound beyond", 30):
        rng = random.Random(777)
        for _ in range(120):
            p = random_presentation(rng, longest=2, max_gens=3)
            assert bounded_dim(extract_species(p)).bound_total == p.dim()
        for _ in range(120):
            p = random_presentation(rng, min_longest=3, max_gens=3)
            assert bounded_dim(extract_species(p)).bound_total >= p.dim()


def test_7_one_motive_goldens(criterion):
    with criterion(7, "1-motive goldens (Kummer, Baker r = 0..5, CM example)", 1):
        kummer = io.one_motive_from_dict(io.load_fixture("kummer_one_motive"))
        rep = one_motive_dims(kummer)
        assert rep.vector == (1, 0, 1, 0, 0, 1) and rep.total == 3
        for r in range(6):
            baker = OneMotiveInput(True, True, max(r, 1), 1, (), r, 0)
            assert one_motive_dims(baker).total == 2 + r
            assert generic_period_dim(one_motive_to_species(baker)).total == 2 + r
        cm = io.one_motive_from_dict(io.load_fixture("cm_curve_one_motive"))
        rep = one_motive_dims(cm)
        assert rep.vector == (1, 2, 1, 2, 2, 1) and rep.total == 9
        assert generic_period_dim(one_motive_to_species(cm)).total == 9


def _saturation_contract(p):
    sat = saturate(p)
    assert is_hereditary(sat)
    assert bongartz_ext_pairwise(sat).matrix(1) == bongartz_ext_pairwise(p).matrix(1)
    assert sat.dim() == hereditary_dim(extract_species(p)).delta_total


def test_8_saturation(criterion):
    with criterion(8, "saturation contract on all fixtures and 100 random presentations", 30):
        for name in io.list_fixtures():
            d = io.load_fixture(name)
            if io.detect_kind(d) == "presentation":
                _saturation_contract(io.presentation_from_dict(d))
        rng = random.Random(4242)
        for _ in range(100):
            _saturation_contract(random_presentation(rng))


def test_9_mtm_cross_module(criterion):
    with criterion(9, "MTM quiver path algebra dimension = dim B_n, n <= 7", 10):
        for fp in (RATIONALS, FieldParams(0, 1, 0)):
            p = path_counts(borel_dims(fp, 7), 7)
            for n in range(8):
                kq = AlgebraPresentation.path_algebra(mtm_quiver(fp, n))
                assert kq.dim() == dim_B(p, n).dim
