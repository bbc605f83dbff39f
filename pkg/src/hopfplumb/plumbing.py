"""Seifert matrix, monodromy and knot invariants of a positive tree plumbing."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from .exact_algebra import (
    IntPolynomial,
    char_poly,
    det,
    int_matrix,
    integer_inverse,
    nullity,
    symmetric_signature,
    unit_circle_root_count,
)
from .trees import Tree, cartan_matrix

HomologyClass = tuple[int, ...]


class DimensionMismatch(ValueError):
    pass


class InternalInconsistency(AssertionError):
    pass


@dataclass(frozen=True, eq=False)
class PlumbingData:
    """Cartan form ``A``, Seifert matrix ``V`` and homological monodromy ``M``."""

    tree: Tree
    A: np.ndarray = field(repr=False)
    V: np.ndarray = field(repr=False)
    M: np.ndarray = field(repr=False)
    M_inv: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return self.tree.n

    def apply(self, x: Sequence[int], power: int = 1) -> HomologyClass:
        """``M^power x`` for ``power`` of either sign."""
        m = self.M if power >= 0 else self.M_inv
        v = np.array([int(c) for c in x], dtype=object)
        for _ in range(abs(power)):
            v = m.dot(v)
        return tuple(int(c) for c in v)


def seifert_matrix(t: Tree) -> np.ndarray:
    # edge {i, j} with i < j contributes lk(v_j, v_i^+) = 1 at row j, column i
    rows = [[-1 if i == j else 0 for j in range(t.n)] for i in range(t.n)]
    for i, j in t.edges:
        rows[j - 1][i - 1] = 1
    return int_matrix(rows)


def build_plumbing(t: Tree) -> PlumbingData:
    A = cartan_matrix(t)
    V = seifert_matrix(t)
    if not ((V + V.T) == -A).all():
        raise InternalInconsistency("V + V^T != -A")
    # M = V^{-T} V, exact; det V = (-1)^n so the inverse is integral
    Vt_inv = integer_inverse(V.T)
    M = Vt_inv.dot(V)
    M_inv = integer_inverse(V).dot(V.T)
    return PlumbingData(t, A, V, M, M_inv)


def q_value(p: PlumbingData, x: Sequence[int]) -> int:
    """``q(x) = x A x^T / 2``."""
    if len(x) != p.n:
        raise DimensionMismatch(f"vector of length {len(x)} for a tree on {p.n} vertices")
    v = np.array([int(c) for c in x], dtype=object)
    twice = int(v.dot(p.A.dot(v)))
    return twice // 2


def boundary_components(p: PlumbingData) -> int:
    return nullity(p.V - p.V.T) + 1


def surface_genus(p: PlumbingData) -> int:
    b = boundary_components(p)
    euler = -(p.n - 1)
    twice_g = 2 - b - euler
    if twice_g % 2 or twice_g < 0:
        raise InternalInconsistency(f"genus parity fails: chi={euler}, b={b}")
    return twice_g // 2


def alexander_polynomial(p: PlumbingData) -> IntPolynomial:
    """``det(t V - V^T)`` with positive leading coefficient.

    Computed as ``det(V) * charpoly(V^{-1} V^T)``; ``V^{-1} V^T`` is ``M^{-1}``.
    """
    return (det(p.V) * char_poly(p.M_inv)).normalized()


class SignatureProfile(NamedTuple):
    samples: list  # (t, omega, sigma, flagged)
    sigma_K: int
    nullity_K: int


def tristram_levine_matrix(p: PlumbingData, omega: complex) -> np.ndarray:
    """Hermitian ``(1 - w) V + (1 - conj w) V^T``."""
    V = np.array(p.V, dtype=float)
    return (1 - omega) * V + (1 - omega.conjugate()) * V.T


def omega_signature(p: PlumbingData, omega: complex, tol: float = 1e-9) -> int:
    eig = np.linalg.eigvalsh(tristram_levine_matrix(p, omega))
    return int((eig > tol).sum() - (eig < -tol).sum())


def signature_profile(p: PlumbingData, samples: int, executor=None) -> SignatureProfile:
    """Levine-Tristram signatures on ``w = exp(i pi t)``, ``t = k / (samples + 1)``.

    Samples where ``|Delta(w)| < 1e-9`` are flagged; their sigma is still
    reported but lies on a jump.  ``sigma_K`` and ``nullity_K`` are exact.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    delta = alexander_polynomial(p)
    ts = [k / (samples + 1) for k in range(1, samples + 2)]

    def one(t):
        w = cmath.exp(1j * math.pi * t) if t != 1 else complex(-1, 0)
        flagged = abs(delta(w)) < 1e-9
        return (t, w, omega_signature(p, w), flagged)

    rows = list(executor.map(one, ts)) if executor is not None else [one(t) for t in ts]
    inertia = symmetric_signature(-2 * p.A)
    return SignatureProfile(rows, inertia.pos - inertia.neg, inertia.null)


class ZeroSignatureCheck(NamedTuple):
    zeros: int
    sigma_plus_nul: int
    holds: bool


def zero_signature_identity_check(p: PlumbingData) -> ZeroSignatureCheck:
    """Unit-circle zeros of Delta against ``|sigma(K)| + nul(K)``, both exact."""
    zeros = unit_circle_root_count(alexander_polynomial(p))
    inertia = symmetric_signature(p.A)
    rhs = abs(inertia.pos - inertia.neg) + inertia.null
    return ZeroSignatureCheck(zeros, rhs, zeros == rhs)
