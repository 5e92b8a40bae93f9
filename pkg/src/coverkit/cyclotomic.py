"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is a rational coefficient vector over the power basis
1, zeta, ..., zeta^(N-1) where zeta = exp(2*pi*i/N).  The representation is
redundant (the vector has length N, the field has degree phi(N)), so
equality and the zero test always reduce modulo the N-th cyclotomic
polynomial; coefficient vectors are never compared directly.

Rational scalars only — verdicts that hinge on "!= 0" must stay exact, so
complex floating point is never used anywhere in this module.  Division is
not provided; nothing downstream needs it.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .numtheory import cyclotomic_poly

__all__ = ["CyclotomicElement", "root_power", "indicator_sum_check", "exp_sum_eval"]

Rational = Fraction | int


class CyclotomicElement:
    """Element of Q(zeta_N), stored as N rational coefficients of zeta^j."""

    __slots__ = ("level", "coeffs")

    def __init__(self, level: int, coeffs: tuple[Fraction, ...]):
        if level < 1:
            raise ValueError(f"level must be positive, got {level}")
        if len(coeffs) != level:
            raise ValueError(f"need {level} coefficients, got {len(coeffs)}")
        self.level = level
        self.coeffs = coeffs

    @classmethod
    def zero(cls, level: int) -> CyclotomicElement:
        return cls(level, (Fraction(0),) * level)

    @classmethod
    def constant(cls, level: int, value: Rational) -> CyclotomicElement:
        coeffs = [Fraction(0)] * level
        coeffs[0] = Fraction(value)
        return cls(level, tuple(coeffs))

    def lift(self, M: int) -> CyclotomicElement:
        """Embed into Q(zeta_M); requires level | M (zeta_N = zeta_M^(M/N))."""
        if M % self.level != 0:
            raise ValueError(f"cannot lift level {self.level} into level {M}")
        if M == self.level:
            return self
        step = M // self.level
        coeffs = [Fraction(0)] * M
        for j, c in enumerate(self.coeffs):
            if c:
                coeffs[j * step] = c
        return CyclotomicElement(M, tuple(coeffs))

    def _common(self, other: CyclotomicElement) -> tuple[CyclotomicElement, CyclotomicElement]:
        N = math.lcm(self.level, other.level)
        return self.lift(N), other.lift(N)

    def __add__(self, other: CyclotomicElement | Rational) -> CyclotomicElement:
        if isinstance(other, (int, Fraction)):
            other = CyclotomicElement.constant(self.level, other)
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        a, b = self._common(other)
        return CyclotomicElement(a.level, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CyclotomicElement:
        return CyclotomicElement(self.level, tuple(-c for c in self.coeffs))

    def __sub__(self, other: CyclotomicElement | Rational) -> CyclotomicElement:
        if isinstance(other, (int, Fraction)):
            other = CyclotomicElement.constant(self.level, other)
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Rational) -> CyclotomicElement:
        return (-self) + other

    def __mul__(self, other: CyclotomicElement | Rational) -> CyclotomicElement:
        if isinstance(other, (int, Fraction)):
            return CyclotomicElement(self.level, tuple(c * other for c in self.coeffs))
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        a, b = self._common(other)
        N = a.level
        out = [Fraction(0)] * N
        for i, ca in enumerate(a.coeffs):
            if ca:
                for j, cb in enumerate(b.coeffs):
                    if cb:
                        out[(i + j) % N] += ca * cb
        return CyclotomicElement(N, tuple(out))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        """True iff the representing polynomial is divisible by Phi_level.

        Denominators are cleared first so the long division runs over the
        integers (Phi_N is monic), which keeps it exact and fast.
        """
        if all(c == 0 for c in self.coeffs):
            return True
        den = math.lcm(*(c.denominator for c in self.coeffs))
        rem = [int(c * den) for c in self.coeffs]
        phi = cyclotomic_poly(self.level)
        deg = len(phi) - 1
        for i in range(len(rem) - 1, deg - 1, -1):
            c = rem[i]
            if c:
                rem[i] = 0
                off = i - deg
                for j in range(deg):
                    if phi[j]:
                        rem[off + j] -= c * phi[j]
        return all(x == 0 for x in rem[:deg])

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CyclotomicElement.constant(self.level, other)
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("CyclotomicElement is not hashable (equality is up to Phi_N)")

    def __repr__(self) -> str:
        terms = [f"{c}*z^{j}" for j, c in enumerate(self.coeffs) if c]
        body = " + ".join(terms) if terms else "0"
        return f"<{body} at level {self.level}>"


def root_power(N: int, j: int) -> CyclotomicElement:
    """zeta_N^j (exponent taken mod N)."""
    if N < 1:
        raise ValueError(f"level must be positive, got {N}")
    coeffs = [Fraction(0)] * N
    coeffs[j % N] = Fraction(1)
    return CyclotomicElement(N, tuple(coeffs))


def indicator_sum_check(N: int, n: int, a: int) -> bool:
    """Check the geometric-series identity
    (1/n) * sum_{r=0}^{n-1} zeta_N^((N/n)*a*r)  ==  1 if n | a else 0.

    Requires n | N.  Returns the verdict of the exact comparison.
    """
    if N < 1 or n < 1:
        raise ValueError("N and n must be positive")
    if N % n != 0:
        raise ValueError(f"n={n} does not divide N={N}")
    step = N // n
    coeffs = [Fraction(0)] * N
    for r in range(n):
        coeffs[(step * a * r) % N] += Fraction(1, n)
    expected = 1 if a % n == 0 else 0
    coeffs[0] -= expected
    return CyclotomicElement(N, tuple(coeffs)).is_zero()


def exp_sum_eval(
    coeffs: list[CyclotomicElement],
    alphas: list[Fraction],
    x: int,
    N: int,
) -> CyclotomicElement:
    """Exact value at integer x of  sum_j c_j * z_j^x  with z_j = exp(-2*pi*i*alpha_j).

    All alphas must be distinct and have denominators dividing N; the result
    is reported at level N.
    """
    if len(coeffs) != len(alphas):
        raise ValueError("coeffs and alphas must have equal length")
    if len(set(alphas)) != len(alphas):
        raise ValueError("alphas must be distinct")
    total = CyclotomicElement.zero(N)
    for c, alpha in zip(coeffs, alphas):
        aN = alpha * N
        if aN.denominator != 1:
            raise ValueError(f"denominator of {alpha} does not divide N={N}")
        total = total + c.lift(N) * root_power(N, -int(aN) * x)
    return total
