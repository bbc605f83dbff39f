"""Exact counting of polynomial roots on the unit circle."""
from __future__ import annotations

from fractions import Fraction
from math import comb

from .poly import IntPolynomial, ZeroPolynomial, _divmod_q, exact_quotient, poly_gcd, squarefree_decomposition


def sturm_sequence(p: IntPolynomial) -> list[list[Fraction]]:
    seq = [[Fraction(c) for c in p.coeffs], [Fraction(c) for c in p.derivative().coeffs]]
    while seq[-1]:
        _, r = _divmod_q(seq[-2], seq[-1])
        seq.append([-c for c in r])
    return [s for s in seq if s]


def _sign_changes(seq, x) -> int:
    vals = []
    for s in seq:
        v = Fraction(0)
        for c in reversed(s):
            v = v * x + c
        if v != 0:
            vals.append(v > 0)
    return sum(a != b for a, b in zip(vals, vals[1:]))


def count_real_roots(p: IntPolynomial, lo, hi) -> int:
    """Number of distinct real roots of ``p`` in the half-open interval (lo, hi]."""
    if p.is_zero():
        raise ZeroPolynomial("root count of the zero polynomial")
    if p.degree <= 0:
        return 0
    seq = sturm_sequence(p)
    return _sign_changes(seq, Fraction(lo)) - _sign_changes(seq, Fraction(hi))


def palindromic_reduction(h: IntPolynomial) -> IntPolynomial:
    """For palindromic ``h`` of degree 2m return ``g`` with ``h(z) = z^m g(z + 1/z)``."""
    if h.degree % 2 or h.reciprocal() != h:
        raise ValueError(f"{h} is not palindromic of even degree")
    f = [Fraction(c) for c in h.coeffs]
    m = h.degree // 2
    g = [Fraction(0)] * (m + 1)
    # peel off c * z^(m-d) (z^2 + 1)^d from the outside in; the remainder
    # stays palindromic about z^m
    for d in range(m, -1, -1):
        c = f[m + d] if m + d < len(f) else Fraction(0)
        if c == 0:
            continue
        g[d] = c
        for j in range(d + 1):
            f[m - d + 2 * j] -= c * comb(d, j)
    assert not any(f), "palindromic reduction left a remainder"
    return IntPolynomial(tuple(int(c) for c in g))


def _squarefree_circle_count(f: IntPolynomial) -> int:
    f, _ = f.strip_t_power()
    if f.degree <= 0:
        return 0
    g = poly_gcd(f, f.reciprocal())
    count = 0
    for root in (1, -1):
        lin = IntPolynomial((-root, 1))
        if g(root) == 0:
            count += 1
            g = exact_quotient(g, lin)
    if g.degree <= 0:
        return count
    # an anti-palindromic factor would vanish at 1, so g is palindromic here;
    # x = +-2 corresponds to z = +-1, already removed
    x_poly = palindromic_reduction(g)
    return count + 2 * count_real_roots(x_poly, -2, 2)


def unit_circle_root_count(p: IntPolynomial) -> int:
    """Number of complex roots of ``p`` with ``|z| = 1``, with multiplicity."""
    if p.is_zero():
        raise ZeroPolynomial("unit circle root count of the zero polynomial")
    return sum(mult * _squarefree_circle_count(f) for f, mult in squarefree_decomposition(p))
