"""Exact integer and rational linear algebra.

Matrices are numpy arrays with ``dtype=object`` holding Python ints (or
``Fraction`` for rational intermediates), so products and sums never
overflow or round.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

from .poly import IntPolynomial


class KernelTooLarge(ValueError):
    pass


class SingularMatrix(ValueError):
    pass


def int_matrix(rows: Iterable[Sequence[int]]) -> np.ndarray:
    """Build an exact integer matrix from nested sequences."""
    rows = [[int(x) for x in row] for row in rows]
    if not rows or not rows[0]:
        raise ValueError("matrix dimensions must be positive")
    out = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != out.shape[1]:
            raise ValueError("ragged matrix rows")
        out[i, :] = row
    return out


def identity(n: int) -> np.ndarray:
    return int_matrix([[int(i == j) for j in range(n)] for i in range(n)])


def to_tuple(v) -> tuple[int, ...]:
    return tuple(int(x) for x in v)


def as_lists(m: np.ndarray) -> list[list[int]]:
    return [[int(x) for x in row] for row in m]


def matrix_power(m: np.ndarray, k: int) -> np.ndarray:
    """``m**k`` for integer ``k``; negative powers need an integral inverse."""
    if k < 0:
        return matrix_power(integer_inverse(m), -k)
    result = identity(m.shape[0])
    base = m
    while k:
        if k & 1:
            result = result.dot(base)
        base = base.dot(base)
        k >>= 1
    return result


def _fraction_matrix(m) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in m]


def rref(m) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and the pivot columns."""
    a = _fraction_matrix(m)
    rows, cols = len(a), len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        a[r] = [x / piv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m) -> int:
    return len(rref(m)[1])


def nullity(m) -> int:
    return np.asarray(m).shape[1] - rank(m)


def primitive_vector(v: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers, first nonzero entry positive."""
    v = [Fraction(x) for x in v]
    den = reduce(lambda x, y: x * y // gcd(x, y), (x.denominator for x in v), 1)
    ints = [int(x * den) for x in v]
    g = reduce(gcd, ints, 0)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    first = next(x for x in ints if x != 0)
    if first < 0:
        g = -g
    return tuple(x // g for x in ints)


def nullspace(m) -> list[tuple[int, ...]]:
    """Basis of the rational right kernel as primitive integer vectors."""
    a, pivots = rref(m)
    cols = np.asarray(m).shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -a[row][f]
        basis.append(primitive_vector(v))
    return basis


def kernel_primitive(m) -> Optional[tuple[int, ...]]:
    """Primitive generator of a one-dimensional kernel, or None if trivial.

    The generator is normalized so its first nonzero entry is positive.
    Raises :class:`KernelTooLarge` for kernels of dimension two or more.
    """
    basis = nullspace(m)
    if not basis:
        return None
    if len(basis) > 1:
        raise KernelTooLarge(f"kernel has dimension {len(basis)}")
    return basis[0]


def det(m) -> int:
    """Determinant of an integer matrix by Bareiss fraction-free elimination."""
    a = [[int(x) for x in row] for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if p is None:
                return 0
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def rational_inverse(m) -> np.ndarray:
    n = np.asarray(m).shape[0]
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(_fraction_matrix(m))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        out[i, :] = red[i][n:]
    return out


def integer_inverse(m) -> np.ndarray:
    """Inverse of a unimodular integer matrix, as an integer matrix."""
    inv = rational_inverse(m)
    if any(x.denominator != 1 for x in inv.flat):
        raise SingularMatrix("inverse is not integral")
    return int_matrix([[int(x) for x in row] for row in inv])


def solve(m, b) -> tuple[Fraction, ...]:
    """Unique solution of ``m x = b`` over Q for square nonsingular ``m``."""
    inv = rational_inverse(m)
    return tuple(sum((inv[i, j] * Fraction(b[j]) for j in range(len(b))), Fraction(0)) for i in range(inv.shape[0]))


def char_poly(m) -> IntPolynomial:
    """``det(tI - m)`` by Berkowitz's division-free algorithm."""
    a = [[int(x) for x in row] for row in m]
    n = len(a)
    # vec holds the char poly of the trailing principal submatrix, descending
    vec = [1, -a[n - 1][n - 1]]
    for k in range(n - 2, -1, -1):
        size = n - k
        r = a[k][k + 1:]
        c = [a[i][k] for i in range(k + 1, n)]
        sub = [row[k + 1:] for row in a[k + 1:]]
        diag = [1, -a[k][k]]
        col = c
        for _ in range(size - 1):
            diag.append(-sum(x * y for x, y in zip(r, col)))
            col = [sum(x * y for x, y in zip(row, col)) for row in sub]
        # lower-triangular Toeplitz (size+1) x size times vec
        vec = [sum(diag[i - j] * vec[j] for j in range(min(i, size - 1) + 1) if i - j < len(diag)) for i in range(size + 1)]
    return IntPolynomial(tuple(reversed(vec)))


def min_poly(m) -> IntPolynomial:
    """Minimal polynomial, from the first linear dependency among I, m, m^2, ..."""
    n = m.shape[0]
    powers = [identity(n)]
    while True:
        cols = [list(p.flat) for p in powers]
        # columns are flattened powers; look for a kernel vector with last entry nonzero
        mat = [[cols[j][i] for j in range(len(cols))] for i in range(n * n)]
        ker = nullspace(mat)
        if ker:
            v = ker[0]
            lead = v[-1]
            if lead == 0:
                raise AssertionError("dependency found before the last power")
            coeffs = [Fraction(x, lead) for x in v]
            assert all(c.denominator == 1 for c in coeffs)
            return IntPolynomial(tuple(int(c) for c in coeffs))
        powers.append(powers[-1].dot(m))


class Inertia(NamedTuple):
    pos: int
    neg: int
    null: int


def symmetric_signature(m) -> Inertia:
    """Inertia of a symmetric rational matrix by congruence diagonalization.

    When every remaining diagonal entry vanishes but some off-diagonal
    entry ``s[i][j]`` does not, the pair is reduced as a 2x2 block
    ``[[0, b], [b, 0]]`` (one positive, one negative direction).
    """
    s = _fraction_matrix(m)
    n = len(s)
    if any(s[i][j] != s[j][i] for i in range(n) for j in range(n)):
        raise ValueError("matrix is not symmetric")
    alive = list(range(n))
    pos = neg = 0
    while alive:
        piv = next((i for i in alive if s[i][i] != 0), None)
        if piv is not None:
            d = s[piv][piv]
            pos += d > 0
            neg += d < 0
            alive.remove(piv)
            for i in alive:
                f = s[i][piv] / d
                if f:
                    for j in alive:
                        s[i][j] -= f * s[piv][j]
            continue
        pair = next(((i, j) for i in alive for j in alive if i < j and s[i][j] != 0), None)
        if pair is None:
            break
        i0, j0 = pair
        b = s[i0][j0]
        pos += 1
        neg += 1
        alive.remove(i0)
        alive.remove(j0)
        # Schur complement of the block [[0, b], [b, 0]], inverse [[0, 1/b], [1/b, 0]]
        for i in alive:
            for j in alive:
                s[i][j] -= (s[i][i0] * s[j0][j] + s[i][j0] * s[i0][j]) / b
    return Inertia(pos, neg, n - pos - neg)
