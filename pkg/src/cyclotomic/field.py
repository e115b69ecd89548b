import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable

import mpmath
from sympy import cyclotomic_poly
from sympy.polys.domains import QQ
from sympy.polys.euclidtools import dup_invert
from sympy.polys.polyerrors import NotInvertible

from ..errors import ConductorError

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def cyclotomic_data(n: int) -> tuple[int, tuple[int, ...]]:
    """Degree of Phi_n and its coefficients below the leading one, constant first"""
    if n < 1:
        raise ConductorError("Conductor must be positive, got %d" % n)
    coeffs = [int(c) for c in cyclotomic_poly(n, polys=True).all_coeffs()]
    return len(coeffs) - 1, tuple(reversed(coeffs[1:]))


def _reduce(vec: list[int], n: int) -> list[int]:
    """Reduce an integer coefficient vector modulo the monic Phi_n in place"""
    degree, low = cyclotomic_data(n)
    for i in range(len(vec) - 1, degree - 1, -1):
        c = vec[i]
        if c:
            vec[i] = 0
            base = i - degree
            for j, p in enumerate(low):
                if p:
                    vec[base + j] -= c * p
    if len(vec) < degree:
        vec.extend([0] * (degree - len(vec)))
    return vec[:degree]


@dataclass(frozen=True, slots=True)
class CycNum:
    """Exact element of Q(zeta_n): sum(num[i] * zeta^i) / den in the power basis"""

    conductor: int
    num: tuple[int, ...]
    den: int = 1

    # Construction

    @classmethod
    def _make(cls, n: int, vec: list[int], den: int) -> "CycNum":
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            vec = [-c for c in vec]
            den = -den
        g = gcd(den, *vec)
        if g > 1:
            vec = [c // g for c in vec]
            den //= g
        if not any(vec):
            den = 1
        return cls(n, tuple(vec), den)

    @classmethod
    def from_vector(cls, n: int, vec: Iterable[int], den: int = 1) -> "CycNum":
        """Build from coefficients of any length, reducing x^n = 1 and modulo Phi_n"""
        folded = [0] * n
        for i, c in enumerate(vec):
            folded[i % n] += c
        return cls._make(n, _reduce(folded, n), den)

    @classmethod
    def from_int(cls, value: int, n: int = 1) -> "CycNum":
        degree, _ = cyclotomic_data(n)
        return cls(n, (value,) + (0,) * (degree - 1), 1)

    @classmethod
    def from_fraction(cls, value: Fraction | int, n: int = 1) -> "CycNum":
        value = Fraction(value)
        degree, _ = cyclotomic_data(n)
        return cls._make(n, [value.numerator] + [0] * (degree - 1), value.denominator)

    @classmethod
    def zero(cls, n: int = 1) -> "CycNum":
        return cls.from_int(0, n)

    @classmethod
    def one(cls, n: int = 1) -> "CycNum":
        return cls.from_int(1, n)

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CycNum":
        """zeta_n^k at conductor n"""
        vec = [0] * n
        vec[k % n] = 1
        return cls._make(n, _reduce(vec, n), 1)

    @classmethod
    def root_of_unity(cls, order: int, k: int, n: int) -> "CycNum":
        """zeta_order^k represented at conductor n (order must divide n)"""
        if n % order:
            raise ConductorError("Order %d does not divide conductor %d" % (order, n))
        return cls.zeta(n, (k % order) * (n // order))

    # Views

    @property
    def degree(self) -> int:
        return len(self.num)

    @property
    def coeffs(self) -> tuple:
        """Power-basis coefficients as sympy QQ rationals"""
        return tuple(QQ(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_one(self) -> bool:
        return self.den == 1 and self.num[0] == 1 and not any(self.num[1:])

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("%s is not rational" % self)
        return Fraction(self.num[0], self.den)

    def is_integer(self) -> bool:
        return self.is_rational() and self.den == 1

    def sort_key(self) -> tuple:
        return (self.conductor, self.num, self.den)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        from .text import format_cyc
        return format_cyc(self)

    # Embeddings and automorphisms

    def embed(self, m: int) -> "CycNum":
        n = self.conductor
        if m == n:
            return self
        if m % n:
            raise ConductorError("Cannot embed conductor %d into %d" % (n, m))
        step = m // n
        vec = [0] * (step * (self.degree - 1) + 1)
        for i, c in enumerate(self.num):
            vec[i * step] = c
        return CycNum._make(m, _reduce(vec, m), self.den)

    def galois_conjugate(self, k: int) -> "CycNum":
        """Apply zeta -> zeta^k"""
        n = self.conductor
        if gcd(k, n) != 1:
            raise ConductorError("Exponent %d is not coprime to conductor %d" % (k, n))
        vec = [0] * n
        for i, c in enumerate(self.num):
            if c:
                vec[(i * k) % n] += c
        return CycNum._make(n, _reduce(vec, n), self.den)

    def conj(self) -> "CycNum":
        """Complex conjugation"""
        return self.galois_conjugate(self.conductor - 1)

    # Arithmetic

    def _coerce(self, other) -> "CycNum | None":
        if isinstance(other, CycNum):
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.from_fraction(other, self.conductor)
        return None

    def _aligned(self, other: "CycNum") -> tuple["CycNum", "CycNum"]:
        n, m = self.conductor, other.conductor
        if n == m:
            return self, other
        if m % n == 0:
            return self.embed(m), other
        if n % m == 0:
            return self, other.embed(n)
        raise ConductorError(
            "Conductors %d and %d do not embed into one another; lift explicitly" % (n, m)
        )

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._aligned(other)
        if a.den == b.den:
            vec = [x + y for x, y in zip(a.num, b.num)]
            return CycNum._make(a.conductor, vec, a.den)
        vec = [x * b.den + y * a.den for x, y in zip(a.num, b.num)]
        return CycNum._make(a.conductor, vec, a.den * b.den)

    __radd__ = __add__

    def __neg__(self) -> "CycNum":
        return CycNum(self.conductor, tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._aligned(other)
        n = a.conductor
        if a.is_rational() or b.is_rational():
            scalar, vector = (a, b) if a.is_rational() else (b, a)
            s = scalar.num[0]
            return CycNum._make(n, [s * c for c in vector.num], a.den * b.den)
        vec = [0] * (2 * a.degree - 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        vec[i + j] += x * y
        return CycNum._make(n, _reduce(vec, n), a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_%d)" % self.conductor)
        n = self.conductor
        if self.is_rational():
            return CycNum._make(n, [self.den] + [0] * (self.degree - 1), self.num[0])
        f = [QQ(int(c)) for c in reversed(self.num)]
        while f and not f[0]:
            f.pop(0)
        phi = [QQ(int(c)) for c in cyclotomic_poly(n, polys=True).all_coeffs()]
        try:
            inv = dup_invert(f, phi, QQ)
        except NotInvertible:  # pragma: no cover - Phi_n is irreducible
            raise ZeroDivisionError("element is not invertible")
        low_first = list(reversed(inv))
        common = lcm(*(int(c.denominator) for c in low_first))
        vec = [int(c.numerator) * (common // int(c.denominator)) for c in low_first]
        vec.extend([0] * (self.degree - len(vec)))
        return CycNum._make(n, [c * self.den for c in vec], common)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_rational():
            if other.is_zero():
                raise ZeroDivisionError("division by zero")
            a, _ = self._aligned(other)
            return CycNum._make(
                a.conductor, [c * other.den for c in a.num], a.den * other.num[0]
            )
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> "CycNum":
        if k < 0:
            return self.inverse() ** (-k)
        result = CycNum.one(self.conductor)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # Diagnostics

    def approx_complex(self, digits: int = 15) -> complex:
        """Floating approximation via zeta_n = exp(2 pi i / n)"""
        if digits < 1:
            raise ValueError("digits must be positive")
        with mpmath.workdps(digits + 10):
            z = mpmath.exp(2j * mpmath.pi / self.conductor)
            total = mpmath.mpc(0)
            for i, c in enumerate(self.num):
                if c:
                    total += c * z ** i
            total /= self.den
            return complex(total)


def lift_common(values: Iterable[CycNum]) -> list[CycNum]:
    """Embed every value at the lcm of their conductors"""
    values = list(values)
    if not values:
        return values
    m = lcm(*(v.conductor for v in values))
    return [v.embed(m) for v in values]


def common_conductor(*conductors: int) -> int:
    return lcm(*conductors) if conductors else 1
