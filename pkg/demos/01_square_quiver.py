"""
A commutative square
====================

Four vertices, two paths from 1 to 4, and the relation that makes them equal.
"""

from specalc import io
from specalc.homalg import bongartz_ext_pairwise, resolution_ext_table
from specalc.pathalg import dims_by_pair, full_algebra

# the free path algebra first: 4 idempotents, 4 arrows, 2 paths of length two
kq = io.presentation_from_dict(io.load_fixture("square_tau0"))
mat, total = dims_by_pair(full_algebra(kq.basis))
print("dim kQ =", total, " paths 1 -> 4:", mat[0][3])

# impose b*a = d*c
a = io.presentation_from_dict(io.load_fixture("square_commutative"))
print("dim A =", a.dim(), " e4 A e1:", a.dims_by_pair()[0][3])

# the relation shows up as a single Ext^2 class from 1 to 4
ext = bongartz_ext_pairwise(a)
for k in range(ext.max_degree + 1):
    print(f"Ext^{k}:", ext.matrix(k))

# resolving the simples directly gives the same table
print("resolutions agree:", resolution_ext_table(a) == ext)
