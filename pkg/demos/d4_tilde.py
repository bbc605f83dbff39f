"""
The affine tree D4~
===================

Monodromy, the radical vector u, the M^2 relations, and the family
w3 + k u that the monodromy cannot move.
"""

from hopfplumb import affine_family, affine_relation_at, build_plumbing, d4tilde_scc_check, named_tree
from hopfplumb import boundary_components, surface_genus

p = build_plumbing(named_tree("~D", 4))
print(p.M)
print("boundary components", boundary_components(p), "genus", surface_genus(p))

fam = affine_family(p)
print("u =", fam.u, " Mu =", p.apply(fam.u))

# M^2 w = w + k u for the six base shapes
for w in [(2, 1, 1, 1, 0), (1, 1, 1, 1, 0), (1, 1, 1, 0, 0), (1, 1, 0, 0, 0), (1, 0, 0, 0, 0), (0, 1, 0, 0, 0)]:
    d, sign, k = affine_relation_at(w, fam, p, 2)
    print(w, "k =", k)

# w3 + k u is fixed by M^2; only k = 0, -1 give a primitive class after capping
for k in range(-3, 4):
    c = d4tilde_scc_check(k)
    print(k, c.coords, c.projected, "realizable" if c.realizable else "not realizable")
