"""
Orbits in a hyperbolic tree
===========================

Embed an affine family w + k u into a hyperbolic tree with knot boundary,
count the monodromy orbits it meets, and watch a seed grow.
"""

import numpy as np

from hopfplumb import Tree, affine_family, build_plumbing, find_affine_subtree, growth_classify
from hopfplumb import jordan_unit_circle_check, orbit_count_in_ball, signature_profile
from hopfplumb.orbits import basis_vector, l1

# center vertex with arms of length 1, 2 and 6
t = Tree.from_edges(10, [(1, 2), (1, 3), (3, 4), (1, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 10)])
p = build_plumbing(t)

sub, emb = find_affine_subtree(t)
print("affine subtree on vertices", emb.images)
f = affine_family(build_plumbing(sub))
w, u = emb.push(basis_vector(sub.n, 1)), emb.push(f.u)

for K in (5, 10, 20, 40):
    print("K =", K, "orbits:", orbit_count_in_ball(w, u, p, K))

print(jordan_unit_circle_check(p))
g = growth_classify(w, p)
print(g.verdict.value, "rate about", round(g.growth_rate_estimate, 4))

# l1 norms along the orbit
x, norms = w, []
for _ in range(12):
    norms.append(l1(x))
    x = p.apply(x)
print(norms)
print(np.diff(np.log(norms))[-4:])

# signature function of the boundary knot
prof = signature_profile(p, 12)
print([s for _, _, s, _ in prof.samples], prof.sigma_K)
