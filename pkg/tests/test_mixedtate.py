from math import gcd

import pytest

from specalc.errors import InconsistentInput
from specalc.mixedtate import (RATIONALS, UPPER_BOUND_NOTE, FieldParams, MtmReport, borel_dims,
                               dim_B, euler_phi, ev_odd_split, min_cyclotomic_params, mtm_quiver,
                               mtm_report, path_counts, projective_dims, zagier_d)
from specalc.quiver import enumerate_paths

P_Z = [1, 0, 0, 1, 0, 1, 1, 1, 2, 2, 3, 4, 5, 7, 9]
D_Z = [1, 0, 1, 1, 1, 2, 2, 3, 4, 5, 7, 9, 12, 16]

FIELDS = [RATIONALS, FieldParams(0, 1, 0), FieldParams(4, 6, 0), FieldParams(1, 0, 2),
          FieldParams(2, 3, 1), FieldParams(0, 5, 4)]


def test_borel_examples():
    assert borel_dims(RATIONALS, 6) == [0, 0, 1, 0, 1, 0]
    assert borel_dims(FieldParams(4, 6), 4) == [9, 6, 10, 6]
    assert borel_dims(FieldParams(0, 1), 5) == [0, 1, 1, 1, 1]
    assert borel_dims(FieldParams(1, 0, 3), 3) == [3, 0, 1]


def test_field_params_validation():
    with pytest.raises(InconsistentInput):
        FieldParams(0, 0, 0)
    with pytest.raises(InconsistentInput):
        FieldParams(1, -1, 0)


def test_path_count_goldens():
    p = path_counts(borel_dims(RATIONALS, 14), 14, RATIONALS)
    assert p == P_Z


def transfer_matrix_paths(fp, n):
    """Entry (0, n) of sum_k A^k for the weighted adjacency matrix A."""
    e = borel_dims(fp, max(n, 1))
    size = n + 1
    a = [[e[j - i - 1] if j > i else 0 for j in range(size)] for i in range(size)]
    total = [[int(i == j) for j in range(size)] for i in range(size)]
    power = [row[:] for row in total]
    for _ in range(n):
        power = [[sum(power[i][k] * a[k][j] for k in range(size)) for j in range(size)] for i in range(size)]
        total = [[total[i][j] + power[i][j] for j in range(size)] for i in range(size)]
    return total[0][n]


@pytest.mark.parametrize("fp", FIELDS)
def test_recursions(fp):
    # the three-term check runs inside path_counts for m up to 50
    p = path_counts(borel_dims(fp, 50), 50, fp)
    for n in range(9):
        assert p[n] == transfer_matrix_paths(fp, n)


def test_three_term_recursion_fails_at_two():
    fp = FieldParams(0, 1, 0)
    p = path_counts(borel_dims(fp, 2), 2)
    e1 = borel_dims(fp, 1)[0]
    assert p[2] != e1 * p[1] + (fp.r2 + 1) * p[0]


def test_dim_B():
    p = P_Z
    assert dim_B(p, 0) == dim_B(p, 0).__class__(1, 1, 1)
    assert dim_B(p, 1).dim == 2
    b9 = dim_B(p, 9)
    assert b9.dim == 35 and b9.first_difference == sum(p[:10]) and b9.second_difference == p[9]


def matrix_power_zagier(n):
    """d_n read off the companion matrix of x^3 - x - 1."""
    m = [[0, 1, 1], [1, 0, 0], [0, 1, 0]]
    state = [[1], [0], [1]]  # (d_2, d_1, d_0)
    if n < 3:
        return [1, 0, 1][n]
    result = [[int(i == j) for j in range(3)] for i in range(3)]
    for _ in range(n - 2):
        result = [[sum(result[i][k] * m[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    return sum(result[0][k] * state[k][0] for k in range(3))


def test_zagier():
    assert zagier_d(13) == D_Z
    assert zagier_d(0) == [1]
    assert zagier_d(20)[20] == matrix_power_zagier(20)
    assert all(zagier_d(40)[n] == path_counts(borel_dims(RATIONALS, 43), 43)[n + 3] for n in range(41))


def test_ev_odd():
    assert ev_odd_split(9) == (20, 15)
    assert ev_odd_split(0) == (1, 0)
    assert ev_odd_split(8)[0] == 15
    for n in range(1, 41):
        assert ev_odd_split(n)[1] == ev_odd_split(n - 1)[0]
    for n in range(12):
        assert sum(ev_odd_split(n)) == dim_B(path_counts(borel_dims(RATIONALS, max(n, 1)), n), n).dim


def test_projective_dims():
    assert projective_dims(P_Z, 3) == [2, 1, 1, 1]


def brute_phi(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def test_euler_phi():
    assert all(euler_phi(n) == brute_phi(n) for n in range(1, 101))


@pytest.mark.parametrize("m, n", [(0, 3), (3, 11), (10, 23)])
def test_min_cyclotomic(m, n):
    fp, got = min_cyclotomic_params(m)
    assert got == n and fp == FieldParams(0, brute_phi(n) // 2, 0)
    assert all(brute_phi(k) // 2 <= m for k in range(3, n))
    assert fp.r2 > m


def test_mtm_quiver():
    q = mtm_quiver(RATIONALS, 5)
    assert sorted((e.source, e.target) for e in q.edges) == [(0, 3), (0, 5), (1, 4), (2, 5)]
    assert q.vertex_names[0] == "Q(0)"
    for fp, n in [(RATIONALS, 8), (FieldParams(0, 1), 6), (FieldParams(2, 1, 1), 4)]:
        q = mtm_quiver(fp, n)
        paths = enumerate_paths(q)
        p = path_counts(borel_dims(fp, n), n)
        assert len(paths) == dim_B(p, n).dim
        assert sum(1 for x in paths if x.source == 0 and x.target == n) == p[n]


def test_report():
    rep = mtm_report(RATIONALS, 9)
    assert rep.dimB[9] == 35 and rep.ev[9] == 20 and rep.odd[9] == 15 and rep.d[:10] == D_Z[:10]
    assert rep.note == UPPER_BOUND_NOTE
    assert MtmReport.from_dict(rep.to_dict()) == rep
    other = mtm_report(FieldParams(0, 1), 5)
    assert other.ev is None and len(other.e) == 5
