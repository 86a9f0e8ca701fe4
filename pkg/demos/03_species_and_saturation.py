"""
Species and saturation
======================

A presentation determines its species (the Ext data between simples).
Dropping the relations gives the hereditary algebra with the same Ext^1.
"""

from specalc import io
from specalc.dimforms import bounded_dim, extract_species, hereditary_dim, saturate

a = io.presentation_from_dict(io.load_fixture("square_commutative"))
s = extract_species(a)
print("Ext^1:", [list(r) for r in s.ext1])
print("higher Ext:", s.ext_higher)

print("hereditary dimension:", hereditary_dim(s).delta_total)
rep = bounded_dim(s)
print("bound:", rep.bound_total, "exact:", rep.exact, f"({rep.reason})")

sat = saturate(a)
print("saturation:", sat.dim(), "relations:", sat.relation_words())

# species with non-trivial division algebras: an elliptic curve with CM sits
# in the middle with d = 2
cm = io.species_from_dict(io.load_fixture("cm_curve_species"))
for verts, dim in hereditary_dim(cm).per_path.items():
    print(verts, dim)
print("bound:", bounded_dim(cm).bound_total)
