"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored as rational coefficient vectors of length ``phi(N)``
(powers of ``zeta_N = exp(2 pi i / N)``) reduced modulo the N-th cyclotomic
polynomial, so equal values have equal coefficient vectors.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Polynomial division by a monic integer polynomial (lists, lowest degree first)."""
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        if c:
            q[i] = c
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return q, _trim(num)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("order must be positive")
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p, r = _divmod_int(p, list(cyclotomic_polynomial(d)))
            assert not r
    return tuple(_trim(p))


def _reduce(coeffs: Sequence[Fraction], n: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    c = [Fraction(x) for x in coeffs]
    for i in range(len(c) - 1, deg - 1, -1):
        top = c[i]
        if top:
            for j, d in enumerate(phi):
                c[i - deg + j] -= top * d
    c = c[:deg] + [Fraction(0)] * max(0, deg - len(c))
    return tuple(c)


def _polymul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _polydivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a, b = _trim(list(a)), _trim(list(b))
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for j, y in enumerate(b):
            a[shift + j] -= f * y
        _trim(a)
    return q, a


def _polysub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


class CyclotomicNumber:
    __slots__ = ("order", "coeffs")
    __hash__ = None

    def __init__(self, order: int, coeffs: Sequence = ()):
        self.order = int(order)
        self.coeffs = _reduce(coeffs, self.order)

    # --- constructors ---
    @classmethod
    def root_of_unity(cls, order: int, power: int) -> CyclotomicNumber:
        """``zeta_order ** power``."""
        c = [Fraction(0)] * (power % order + 1)
        c[power % order] = Fraction(1)
        return cls(order, c)

    @classmethod
    def rational(cls, order: int, value) -> CyclotomicNumber:
        return cls(order, [Fraction(value)])

    # --- coercion helpers ---
    def lift(self, order: int) -> CyclotomicNumber:
        """The same value viewed in Q(zeta_order); ``self.order`` must divide ``order``."""
        if order % self.order:
            raise ValueError(f"cannot embed Q(zeta_{self.order}) in Q(zeta_{order})")
        step = order // self.order
        c = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1 if self.coeffs else 0)
        for i, x in enumerate(self.coeffs):
            c[i * step] = x
        return CyclotomicNumber(order, c)

    def _coerce(self, other) -> tuple[CyclotomicNumber, CyclotomicNumber]:
        if isinstance(other, (int, Fraction)):
            return self, CyclotomicNumber.rational(self.order, other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented, NotImplemented
        if other.order == self.order:
            return self, other
        m = self.order * other.order // math.gcd(self.order, other.order)
        return self.lift(m), other.lift(m)

    # --- arithmetic ---
    def __add__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return CyclotomicNumber(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, [-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return CyclotomicNumber(a.order, _polymul(a.coeffs, b.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicNumber:
        """Multiplicative inverse via the extended Euclidean algorithm modulo Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        r0 = [Fraction(x) for x in cyclotomic_polynomial(self.order)]
        r1 = _trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _polydivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _polysub(s0, _polymul(q, s1))
        c = r1[0]
        return CyclotomicNumber(self.order, [x / c for x in s1])

    def __truediv__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = CyclotomicNumber.rational(self.order, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conjugate(self) -> CyclotomicNumber:
        """Complex conjugate, ``zeta -> zeta**-1``."""
        n = self.order
        c = [Fraction(0)] * n
        for i, x in enumerate(self.coeffs):
            c[(-i) % n] += x
        return CyclotomicNumber(n, c)

    # --- comparison and rendering ---
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __eq__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return a.coeffs == b.coeffs

    def __complex__(self) -> complex:
        z = cmath.exp(2j * math.pi / self.order)
        return complex(sum(float(c) * z**i for i, c in enumerate(self.coeffs) if c))

    def __repr__(self) -> str:
        terms = [f"{c}*z^{i}" for i, c in enumerate(self.coeffs) if c]
        return f"CyclotomicNumber({self.order}: {' + '.join(terms) or '0'})"
