"""
Linear quivers and long resolutions
===================================

On A_n with every composite of two arrows killed, each simple has a
resolution as long as the quiver allows.
"""

from math import comb

from specalc.dimforms import bounded_dim, extract_species
from specalc.homalg import bongartz_ext_pairwise, global_dim_upper
from specalc.pathalg import AlgebraPresentation, linear_quiver, radical_square_zero

for n in range(4, 9):
    one_rel = AlgebraPresentation(linear_quiver(n), ["a2*a1"])
    b = radical_square_zero(linear_quiver(n))
    ext = bongartz_ext_pairwise(b)
    print(f"n={n}: dim kQ/(a2 a1) = {one_rel.dim()} (C(n+1,2) = {comb(n + 1, 2)}),"
          f" dim kQ/rad^2 = {b.dim()}, Ext totals = {ext.totals[1:]},"
          f" gldim = {global_dim_upper(b).exact}")

# the species estimate is an upper bound; for kQ/rad^2 it is sharp
b = radical_square_zero(linear_quiver(6))
print("estimate:", bounded_dim(extract_species(b)).bound_total, " true:", b.dim())
one_rel = AlgebraPresentation(linear_quiver(6), ["a2*a1"])
print("estimate:", bounded_dim(extract_species(one_rel)).bound_total, " true:", one_rel.dim())
