"""
Hopf band classes on spherical trees
====================================

Count the solutions of q(x) = 1 for the A, D and E trees and group them
into monodromy orbits.
"""

from hopfplumb import build_plumbing, enumerate_norm_one, named_tree, orbit_partition

# A_n and D_n: the counts follow n(n+1) and 2n(n-1)
for n in range(1, 9):
    p = build_plumbing(named_tree("A", n))
    print("A%d" % n, len(enumerate_norm_one(p)), n * (n + 1))
for n in range(4, 9):
    p = build_plumbing(named_tree("D", n))
    print("D%d" % n, len(enumerate_norm_one(p)), 2 * n * (n - 1))

# the exceptional trees
for fam in ("E6", "E7", "E8"):
    p = build_plumbing(named_tree(fam))
    sols = enumerate_norm_one(p)
    part = orbit_partition(sols, p)
    sizes = [len(c) for c in part.classes]
    print(fam, len(sols), "solutions in", len(part), "orbits (mod sign), sizes", sizes)

# E8 has a solution with an entry of 6
e8 = enumerate_norm_one(build_plumbing(named_tree("E8")))
print(max(e8, key=lambda x: max(map(abs, x))))
