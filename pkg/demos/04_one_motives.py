"""
Periods of 1-motives
====================

Six numbers describe the period space of a 1-motive [L -> G].  Their sum
agrees with the general species formula.
"""

from specalc import io
from specalc.motives import (OneMotiveInput, generic_period_dim, one_motive_dims,
                             one_motive_to_species)

names = ["delta_alg", "delta_2", "delta_Ta", "delta_3", "delta_inc2", "delta_inc3"]

for fixture in ["kummer_one_motive", "cm_curve_one_motive", "baker_r3_one_motive"]:
    inp = io.one_motive_from_dict(io.load_fixture(fixture))
    rep = one_motive_dims(inp)
    print(fixture, dict(zip(names, rep.vector)), "total", rep.total)
    print("  species formula:", generic_period_dim(one_motive_to_species(inp)).total)

# logarithms of r multiplicatively independent numbers
for r in range(6):
    inp = OneMotiveInput(True, True, max(r, 1), 1, (), r, 0)
    print(f"r={r}: {one_motive_dims(inp).total}")
