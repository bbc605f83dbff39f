"""Univariate polynomials with exact integer coefficients.

Coefficients are stored in ascending degree order.  Intermediate division
steps run over :class:`fractions.Fraction` and results are brought back to
primitive integer form where the operation calls for it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd


class ZeroPolynomial(ValueError):
    pass


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial ``c[0] + c[1] t + ... + c[d] t^d``.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        trimmed = tuple(int(c) for c in _trim(self.coeffs))
        object.__setattr__(self, "coeffs", trimmed)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return self.degree <= 0

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def primitive(self) -> "IntPolynomial":
        """Content removed, leading coefficient made positive."""
        if self.is_zero():
            return self
        c = self.content()
        if self.leading < 0:
            c = -c
        return IntPolynomial(tuple(x // c for x in self.coeffs))

    def normalized(self) -> "IntPolynomial":
        """Leading coefficient made positive; content kept."""
        return -self if self.leading < 0 else self

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def reciprocal(self) -> "IntPolynomial":
        """``t^deg p(1/t)`` (the coefficient list reversed)."""
        return IntPolynomial(tuple(reversed(self.coeffs)))

    def strip_t_power(self) -> tuple["IntPolynomial", int]:
        """Split off the largest power of ``t`` dividing the polynomial."""
        k = 0
        while k < len(self.coeffs) and self.coeffs[k] == 0:
            k += 1
        return IntPolynomial(self.coeffs[k:]), k

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = IntPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other):
        q, r = _divmod_q(list(self.coeffs), list(_coerce(other).coeffs))
        if any(x.denominator != 1 for x in q + r):
            raise ValueError("division is not exact over the integers")
        return IntPolynomial(tuple(int(x) for x in q)), IntPolynomial(tuple(int(x) for x in r))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "IntPolynomial") -> bool:
        """True if ``self`` divides ``other`` over the rationals."""
        _, r = _divmod_q(list(other.coeffs), list(self.coeffs))
        return not r

    def eval_matrix(self, m):
        """Evaluate at a square integer matrix by Horner's rule."""
        import numpy as np

        n = m.shape[0]
        acc = np.zeros((n, n), dtype=object)
        ident = np.eye(n, dtype=int).astype(object)
        for c in reversed(self.coeffs):
            acc = acc.dot(m) + c * ident
        return acc

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                body = ("" if a == 1 else f"{a}*") + ("t" if k == 1 else f"t^{k}")
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"IntPolynomial({str(self)!r})"


def _coerce(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    return IntPolynomial((int(x),))


T = IntPolynomial((0, 1))


# Rational coefficient lists (ascending) ------------------------------------

def _divmod_q(a, b):
    a = [Fraction(x) for x in _trim(a)]
    b = [Fraction(x) for x in _trim(b)]
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / b[-1]
        q[shift] = f
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        a = _trim(a)
    return _trim(q), a


def _to_primitive(coeffs) -> IntPolynomial:
    coeffs = _trim(coeffs)
    if not coeffs:
        return IntPolynomial()
    den = reduce(lambda x, y: x * y // gcd(x, y), (Fraction(c).denominator for c in coeffs), 1)
    return IntPolynomial(tuple(int(Fraction(c) * den) for c in coeffs)).primitive()


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Greatest common divisor over Q, returned primitive with positive lead.

    ``poly_gcd(0, 0)`` raises :class:`ZeroPolynomial`.
    """
    if p.is_zero() and q.is_zero():
        raise ZeroPolynomial("gcd of two zero polynomials")
    a, b = list(p.coeffs), list(q.coeffs)
    while b:
        _, r = _divmod_q(a, b)
        a, b = b, r
        # keep coefficient growth in check
        a = list(_to_primitive(a).coeffs)
        b = list(_to_primitive(b).coeffs) if b else b
    return _to_primitive(a)


def exact_quotient(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """``p / q`` over Q, brought to primitive integer form."""
    quo, rem = _divmod_q(list(p.coeffs), list(q.coeffs))
    if rem:
        raise ValueError(f"{q} does not divide {p}")
    return _to_primitive(quo)


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm: ``p ~ prod f_i^i`` with each ``f_i`` squarefree.

    Returns the non-constant ``(f_i, i)`` pairs; the unit/content factor is
    dropped.
    """
    if p.is_zero():
        raise ZeroPolynomial("squarefree decomposition of 0")
    p = p.primitive()
    if p.degree <= 0:
        return []

    def deriv(c):
        return _trim([i * x for i, x in enumerate(c)][1:])

    def sub(x, y):
        n = max(len(x), len(y))
        x = list(x) + [0] * (n - len(x))
        y = list(y) + [0] * (n - len(y))
        return _trim([s - t for s, t in zip(x, y)])

    def quo(x, y):
        q, r = _divmod_q(x, y)
        assert not r
        return q

    f = list(p.coeffs)
    a = list(poly_gcd(p, p.derivative()).coeffs)
    b, c = quo(f, a), quo(deriv(f), a)
    d = sub(c, deriv(b))
    out = []
    i = 1
    while len(b) > 1:
        if d:
            a = list(poly_gcd(_to_primitive(b), _to_primitive(d)).coeffs)
        else:
            a = b
        if len(a) > 1:
            out.append((_to_primitive(a), i))
        b, c = quo(b, a), quo(d, a)
        d = sub(c, deriv(b))
        i += 1
    return out
