"""Monodromy orbits of Hopf band classes.

Covers standard Hopf bands, orbit partitions and coverage certificates,
the ``M^d v = +-(v + k u)`` relations of affine trees, the primitivity
obstruction on ~D_4, the Jordan-block test, and orbit growth.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from functools import reduce
from typing import NamedTuple, Optional, Sequence

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from .enumeration import AffineFamily
from .exact_algebra import IntPolynomial, int_matrix, min_poly, poly_gcd, solve, unit_circle_root_count
from .plumbing import HomologyClass, PlumbingData, q_value
from .trees import enumerate_paths


class NotClosedUnderM(ValueError):
    pass


class ZeroVector(ValueError):
    pass


class FamilyNotIsotropicShift(ValueError):
    pass


def sign_normal(x: Sequence[int]) -> HomologyClass:
    """``x`` or ``-x``, whichever has a positive first nonzero entry."""
    first = next((c for c in x if c), 0)
    return tuple(x) if first >= 0 else tuple(-c for c in x)


def neg(x: Sequence[int]) -> HomologyClass:
    return tuple(-c for c in x)


def l1(x: Sequence[int]) -> int:
    return sum(abs(c) for c in x)


def basis_vector(n: int, *indices: int) -> HomologyClass:
    """Sum of the 1-based basis vectors ``v_i`` for the given indices."""
    out = [0] * n
    for i in indices:
        out[i - 1] += 1
    return tuple(out)


def standard_hopf_bands(p: PlumbingData) -> list[HomologyClass]:
    """``+-`` indicator vectors of the vertex sets of simple paths."""
    out = set()
    for path in enumerate_paths(p.tree):
        v = basis_vector(p.n, *path)
        out.add(v)
        out.add(neg(v))
    return sorted(out)


# Generators named for the exceptional trees (1-based vertex sets).
LISTED_GENERATORS = {
    "E6": [(1,), (1, 2), (1, 3), (1, 4)],
    "E7": [(1,), (2,), (3,), (1, 3), (1, 4), (4, 6), (1, 4, 6)],
    "E8": [(1,), (2,), (3,), (4,), (1, 2), (1, 3), (1, 4), (6, 7), (7, 8), (1, 4, 6)],
}


def default_generators(p: PlumbingData, family: Optional[str]) -> list[HomologyClass]:
    """The listed Hopf bands for E6/E7/E8, standard Hopf bands otherwise."""
    if family in LISTED_GENERATORS:
        return [basis_vector(p.n, *s) for s in LISTED_GENERATORS[family]]
    return standard_hopf_bands(p)


@dataclass
class OrbitPartition:
    classes: list[list[HomologyClass]]
    representatives: list[HomologyClass]
    modulo_sign: bool

    def class_of(self, x: Sequence[int]) -> int:
        x = tuple(x)
        for i, cls in enumerate(self.classes):
            if x in cls:
                return i
        raise KeyError(x)

    def __len__(self):
        return len(self.classes)


def orbit_partition(vectors, p: PlumbingData, modulo_sign: bool = True) -> OrbitPartition:
    """Partition a finite M-invariant set into classes of ``x ~ Mx`` (and ``x ~ -x``)."""
    vecs = sorted(set(tuple(int(c) for c in v) for v in vectors))
    members = set(vecs)
    ds = DisjointSet(vecs)
    for x in vecs:
        y = p.apply(x)
        if y not in members:
            raise NotClosedUnderM(f"M{x} = {y} leaves the input set")
        ds.merge(x, y)
        if modulo_sign and neg(x) in members:
            ds.merge(x, neg(x))
    classes = [sorted(s) for s in ds.subsets()]
    classes.sort(key=lambda c: c[0])
    return OrbitPartition(classes, [c[0] for c in classes], modulo_sign)


class Coverage(NamedTuple):
    covered: bool
    witness: dict  # solution -> (generator, power, sign)
    missing: list


def coverage_check(solutions, generators, p: PlumbingData, modulo_sign: bool = True,
                   max_power: int = 60) -> Coverage:
    """Check each solution is ``+-M^j g`` for a generator ``g`` and ``|j| <= max_power``."""
    reach = {}
    for g in generators:
        g = tuple(g)
        for direction in (1, -1):
            x = g
            for j in range(max_power + 1):
                power = direction * j
                prev = reach.get(x)
                if prev is None or abs(power) < abs(prev[1]):
                    reach[x] = (g, power, 1)
                x = p.apply(x, direction)
    witness, missing = {}, []
    for s in solutions:
        s = tuple(s)
        if s in reach:
            witness[s] = reach[s]
        elif modulo_sign and neg(s) in reach:
            g, j, _ = reach[neg(s)]
            witness[s] = (g, j, -1)
        else:
            missing.append(s)
    return Coverage(not missing, witness, missing)


class AffineOrbitSignature(NamedTuple):
    """Certifies ``M^d v = sign * (v + k u)``."""
    d: int
    sign: int
    k: int


def affine_relation_at(v, fam: AffineFamily, p: PlumbingData, d: int) -> Optional[AffineOrbitSignature]:
    """``(d, sign, k)`` if ``M^d v = sign * (v + k u)`` holds for this exact ``d``."""
    v = tuple(v)
    x = p.apply(v, d)
    r = fam.removed_vertex - 1
    for sign in (1, -1):
        diff = tuple(sign * a - b for a, b in zip(x, v))
        k = diff[r] * fam.u[r]
        if diff == tuple(k * c for c in fam.u):
            return AffineOrbitSignature(d, sign, k)
    return None


def affine_orbit_signature(v, fam: AffineFamily, p: PlumbingData, max_d: int = 64
                           ) -> Optional[AffineOrbitSignature]:
    """Smallest ``d <= max_d`` with ``M^d v = +-(v + k u)``, or None."""
    for d in range(1, max_d + 1):
        sig = affine_relation_at(v, fam, p, d)
        if sig is not None:
            return sig
    return None


def is_primitive(x: Sequence[int]) -> bool:
    g = reduce(gcd, (int(c) for c in x), 0)
    if g == 0:
        raise ZeroVector("primitivity of the zero vector")
    return g == 1


class SccCheck(NamedTuple):
    projected: tuple[int, int]
    realizable: bool
    coords: tuple[int, ...]


def d4tilde_scc_check(k: int) -> SccCheck:
    """Simple-closed-curve test for ``w3 + k u`` on ~D_4.

    Rewrites the class in the basis ``(v1, v2, v2 - v3, v3 - v4, v4 - v5)``;
    capping the three boundary curves carried by the last three basis
    vectors leaves the first two coordinates, which must be primitive.
    """
    w3 = (1, 1, 1, 0, 0)
    u = (2, 1, 1, 1, 1)
    w = [a + k * b for a, b in zip(w3, u)]
    # columns are the new basis vectors in old coordinates
    basis = int_matrix([
        [1, 0, 0, 0, 0],
        [0, 1, 1, 0, 0],
        [0, 0, -1, 1, 0],
        [0, 0, 0, -1, 1],
        [0, 0, 0, 0, -1],
    ])
    coords = solve(basis, w)
    assert all(c.denominator == 1 for c in coords)
    coords = tuple(int(c) for c in coords)
    projected = coords[:2]
    return SccCheck(projected, is_primitive(projected), coords)


class JordanCheck(NamedTuple):
    ok: bool
    repeated_part: IntPolynomial


def jordan_unit_circle_check(p: PlumbingData) -> JordanCheck:
    """No Jordan block of size > 1 at an eigenvalue of modulus one.

    The roots of ``gcd(m, m')`` for the minimal polynomial ``m`` are exactly
    the eigenvalues carrying a block of size at least two.
    """
    mp = min_poly(p.M)
    rep = poly_gcd(mp, mp.derivative())
    ok = rep.degree <= 0 or unit_circle_root_count(rep) == 0
    return JordanCheck(ok, rep)


class Verdict(str, Enum):
    BOUNDED = "bounded"
    EXPONENTIAL = "exponential"
    INCONCLUSIVE = "inconclusive"


@dataclass
class GrowthReport:
    verdict: Verdict
    period: Optional[int] = None
    growth_rate_estimate: Optional[float] = None
    steps_used: int = 0
    # the Exponential verdict is a numeric slope test; the exact dichotomy
    # rests on jordan_unit_circle_check
    method: str = field(default="exact repeat detection / log-norm slope")


def growth_classify(v, p: PlumbingData, max_steps: int = 200) -> GrowthReport:
    """Iterate ``x -> Mx`` exactly; report a period or the log-norm slope."""
    x = tuple(int(c) for c in v)
    if not any(x):
        raise ZeroVector("growth of the zero vector")
    seen = {x: 0}
    norms = [l1(x)]
    for step in range(1, max_steps + 1):
        x = p.apply(x)
        if x in seen:
            return GrowthReport(Verdict.BOUNDED, period=step - seen[x], steps_used=step)
        seen[x] = step
        norms.append(l1(x))
    half = len(norms) // 2
    ks = np.arange(half, len(norms), dtype=float)
    logs = np.array([math.log(nm) for nm in norms[half:]])
    slope = float(np.polyfit(ks, logs, 1)[0]) if len(ks) > 1 else 0.0
    if slope >= math.log(1.01):
        return GrowthReport(Verdict.EXPONENTIAL, growth_rate_estimate=math.exp(slope), steps_used=max_steps)
    return GrowthReport(Verdict.INCONCLUSIVE, growth_rate_estimate=math.exp(slope), steps_used=max_steps)


ESCAPE_FACTOR = 4


def orbit_count_in_ball(fam_w, fam_u, p: PlumbingData, K: int) -> int:
    """Orbit classes (mod sign) among ``{w + k u : |k| <= K}``.

    Each member is pushed forward under M while its l1 norm stays within
    ``ESCAPE_FACTOR`` times the largest member norm; members met along the
    way are merged.
    """
    w = tuple(int(c) for c in fam_w)
    u = tuple(int(c) for c in fam_u)
    base_q = q_value(p, w)
    members = {}
    for k in range(-K, K + 1):
        x = tuple(a + k * b for a, b in zip(w, u))
        if q_value(p, x) != base_q:
            raise FamilyNotIsotropicShift(f"q(w + {k} u) != q(w)")
        members[sign_normal(x)] = k
    bound = ESCAPE_FACTOR * max(l1(x) for x in members)
    ds = DisjointSet(members)
    for start in members:
        x = start
        while True:
            x = p.apply(x)
            if l1(x) > bound:
                break
            key = sign_normal(x)
            if key == start:
                break
            if key in members:
                ds.merge(start, key)
    return ds.n_subsets
