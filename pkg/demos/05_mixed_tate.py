"""
Mixed Tate motives over Z
=========================

Counting paths in the quiver with e_{j-i} arrows from i to j reproduces the
dimension bounds for multiple zeta values.
"""

from specalc.mixedtate import (RATIONALS, FieldParams, borel_dims, dim_B, ev_odd_split,
                               min_cyclotomic_params, mtm_quiver, mtm_report, path_counts,
                               zagier_d)
from specalc.pathalg import AlgebraPresentation

print("e_m:", borel_dims(RATIONALS, 10))
p = path_counts(borel_dims(RATIONALS, 20), 20, RATIONALS)
print("p_m:", p)
print("d_n:", zagier_d(17))

rep = mtm_report(RATIONALS, 9)
print("dim B_9 =", rep.dimB[9], " ev/odd:", ev_odd_split(9))
print(rep.note)

# the same numbers from an actual path algebra
for n in range(8):
    kq = AlgebraPresentation.path_algebra(mtm_quiver(RATIONALS, n))
    print(n, kq.dim(), dim_B(p, n).dim)

# an imaginary quadratic field, and a cyclotomic field with many even classes
print(mtm_report(FieldParams(0, 1, 0), 8).p)
print(min_cyclotomic_params(10))
