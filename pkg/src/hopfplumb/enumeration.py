"""Integral solutions of q(x) = 1 for spherical and affine trees."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .exact_algebra import kernel_primitive, symmetric_signature
from .plumbing import HomologyClass, PlumbingData
from .trees import Kind, canonical_numbering, classify_tree


class NotPositiveDefinite(ValueError):
    pass


class NotAffine(ValueError):
    pass


class InvalidParameter(ValueError):
    pass


def _ldl(gram) -> tuple[list[Fraction], list[list[Fraction]]]:
    """Write ``x G x^T = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2`` exactly."""
    n = gram.shape[0]
    g = [[Fraction(int(gram[i, j])) for j in range(n)] for i in range(n)]
    d = [Fraction(0)] * n
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = g[i][i]
        if d[i] <= 0:
            raise NotPositiveDefinite("Gram matrix is not positive definite")
        for j in range(i + 1, n):
            mu[i][j] = g[i][j] / d[i]
        for j in range(i + 1, n):
            for k in range(i + 1, n):
                g[j][k] -= mu[i][j] * d[i] * mu[i][k]
    return d, mu


def short_vectors(gram, value: int) -> list[HomologyClass]:
    """All integer ``x`` with ``x G x^T == value``, G positive definite.

    Depth-first Fincke-Pohst enumeration from the last coordinate down, with
    every pruning bound checked in exact arithmetic.
    """
    d, mu = _ldl(gram)
    n = len(d)
    bound = Fraction(value)
    found = []
    x = [0] * n

    def recurse(i: int, remaining: Fraction):
        center = -sum((mu[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        radius_sq = remaining / d[i]
        r = math.sqrt(float(radius_sq)) + 1
        lo, hi = math.floor(float(center) - r), math.ceil(float(center) + r)
        for xi in range(lo, hi + 1):
            gap = (xi - center) ** 2
            if gap > radius_sq:
                continue
            x[i] = xi
            rest = remaining - d[i] * gap
            if i == 0:
                if rest == 0:
                    found.append(tuple(x))
            else:
                recurse(i - 1, rest)
        x[i] = 0

    recurse(n - 1, bound)
    return sorted(found)


def _require_spherical(p: PlumbingData):
    inertia = symmetric_signature(p.A)
    if inertia.neg or inertia.null:
        raise NotPositiveDefinite("q is not positive definite: tree is not spherical")


def enumerate_norm_one(p: PlumbingData) -> list[HomologyClass]:
    """Every x with q(x) = 1, in lexicographic order."""
    _require_spherical(p)
    return short_vectors(p.A, 2)


@dataclass(frozen=True)
class AffineFamily:
    """``q^{-1}(1) = { w + k u : w in base_solutions, k in Z }``.

    ``removed_vertex`` is 1-based; deleting it leaves the spherical subtree
    carrying the base solutions (which vanish there).
    """

    u: HomologyClass
    removed_vertex: int
    base_solutions: tuple[HomologyClass, ...]

    def member(self, w: HomologyClass, k: int) -> HomologyClass:
        return tuple(a + k * b for a, b in zip(w, self.u))

    def decompose(self, x: HomologyClass) -> tuple[HomologyClass, int]:
        """Split ``x`` as ``w + k u`` with ``w`` supported off the removed vertex."""
        k = x[self.removed_vertex - 1] * self.u[self.removed_vertex - 1]
        w = tuple(a - k * b for a, b in zip(x, self.u))
        return w, k


# designated extra vertex in each family's standard numbering
_REMOVED = {"~E6": 7, "~E7": 8, "~E8": 9}


def designated_vertex(family: str, param: Optional[int]) -> int:
    if family == "~D":
        return 5 if param == 4 else param + 1
    return _REMOVED[family]


def affine_family(p: PlumbingData) -> AffineFamily:
    cls = classify_tree(p.tree)
    if cls.kind != Kind.AFFINE:
        raise NotAffine(f"tree is {cls.kind.value}, not affine")
    _, perm = canonical_numbering(p.tree)
    inv = {new: old for old, new in perm.items()}
    removed = inv[designated_vertex(cls.family, cls.param)]
    u = kernel_primitive(p.A)
    if u[removed - 1] < 0:
        u = tuple(-c for c in u)
    if u[removed - 1] != 1:
        raise AssertionError(f"radical generator {u} is not 1 at vertex {removed}")
    keep = [i for i in range(p.n) if i != removed - 1]
    sub = p.A[np.ix_(keep, keep)]
    base = []
    for w in short_vectors(sub, 2):
        full = list(w)
        full.insert(removed - 1, 0)
        base.append(tuple(full))
    return AffineFamily(u, removed, tuple(sorted(base)))


def dn_solution_set(n: int) -> list[HomologyClass]:
    """Closed-form list of the 2n(n-1) solutions of q(x) = 1 on D_n."""
    if not isinstance(n, int) or n < 4:
        raise InvalidParameter("D_n needs n >= 4")
    out = set()

    def add(v):
        assert len(v) == n
        out.add(tuple(v))
        out.add(tuple(-c for c in v))

    for r in range(n - 3):
        for s in range(1, n - 2 - r):
            t = n - 3 - r - s
            add([2, 1, 1] + [2] * r + [1] * s + [0] * t)
    for x2 in (0, 1):
        for x3 in (0, 1):
            for r in range(n - 2):
                add([1, x2, x3] + [1] * r + [0] * (n - 3 - r))
    for r in range(3, n):
        for s in range(1, n - r + 1):
            add([0] * r + [1] * s + [0] * (n - r - s))
    for k in (1, 2):
        v = [0] * n
        v[k] = 1
        add(v)
    return sorted(out)
