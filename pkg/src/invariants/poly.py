"""Sparse multivariate polynomials with cyclotomic coefficients.

A polynomial is a mapping from exponent tuples to nonzero CycNum values that
all share one conductor. Printing uses the graded lexicographic order.
"""
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm
from tokenize import TokenError
from typing import Iterable, Mapping, Sequence

from sympy import Poly, Symbol
from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import parse_expr, standard_transformations
from sympy.polys.polyerrors import BasePolynomialError

from ..cyclotomic.field import CycNum
from ..cyclotomic.text import format_cyc, parse_body
from ..errors import PolynomialError, TextFormatError

logger = logging.getLogger(__name__)

Exponent = tuple[int, ...]


@lru_cache(maxsize=None)
def monomials(nvars: int, degree: int) -> tuple[Exponent, ...]:
    """Exponents of total degree `degree`, in descending lexicographic order"""
    if nvars == 0:
        return ((),) if degree == 0 else ()
    if nvars == 1:
        return ((degree,),)
    out = []
    for first in range(degree, -1, -1):
        out.extend((first,) + rest for rest in monomials(nvars - 1, degree - first))
    return tuple(out)


def grlex_key(exp: Exponent) -> tuple:
    return (sum(exp), exp)


def grevlex_key(exp: Exponent) -> tuple:
    """Sort key, larger means larger in graded reverse lexicographic order"""
    return (sum(exp), tuple(-e for e in reversed(exp)))


def grevlex_monomials(nvars: int, degree: int) -> list[Exponent]:
    return sorted(monomials(nvars, degree), key=grevlex_key, reverse=True)


def multinomial(exp: Exponent) -> int:
    out = factorial(sum(exp))
    for e in exp:
        out //= factorial(e)
    return out


def _add_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


@dataclass(frozen=True, eq=False)
class SparsePoly:
    nvars: int
    terms: Mapping[Exponent, CycNum]
    conductor: int = 1

    def __post_init__(self):
        n = lcm(self.conductor, *(c.conductor for c in self.terms.values()))
        clean = {}
        for exp, c in self.terms.items():
            if len(exp) != self.nvars or any(e < 0 for e in exp):
                raise PolynomialError("Bad exponent %r for %d variables" % (exp, self.nvars))
            if c:
                clean[tuple(exp)] = c.embed(n)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "conductor", n)

    @classmethod
    def _trusted(cls, nvars: int, terms: dict[Exponent, CycNum], conductor: int) -> "SparsePoly":
        """Skip validation; terms must be nonzero and already at the conductor"""
        poly = object.__new__(cls)
        object.__setattr__(poly, "nvars", nvars)
        object.__setattr__(poly, "terms", terms)
        object.__setattr__(poly, "conductor", conductor)
        return poly

    # Construction

    @classmethod
    def zero(cls, nvars: int, conductor: int = 1) -> "SparsePoly":
        return cls._trusted(nvars, {}, conductor)

    @classmethod
    def constant(cls, nvars: int, value: CycNum | int | Fraction) -> "SparsePoly":
        if not isinstance(value, CycNum):
            value = CycNum.from_fraction(value)
        return cls(nvars, {(0,) * nvars: value}, value.conductor)

    @classmethod
    def variable(cls, i: int, nvars: int) -> "SparsePoly":
        exp = tuple(1 if j == i else 0 for j in range(nvars))
        return cls._trusted(nvars, {exp: CycNum.one()}, 1)

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: CycNum | int | Fraction = 1) -> "SparsePoly":
        if not isinstance(coeff, CycNum):
            coeff = CycNum.from_fraction(coeff)
        return cls(len(exp), {tuple(exp): coeff}, coeff.conductor)

    @classmethod
    def from_coefficients(cls, nvars: int, items: Iterable[tuple[Exponent, CycNum | int | Fraction]]) -> "SparsePoly":
        """Sum of coefficient * monomial pairs; repeated exponents add up"""
        acc: dict[Exponent, CycNum] = {}
        for exp, c in items:
            if not isinstance(c, CycNum):
                c = CycNum.from_fraction(c)
            exp = tuple(exp)
            if exp in acc:
                n = lcm(acc[exp].conductor, c.conductor)
                acc[exp] = acc[exp].embed(n) + c.embed(n)
            else:
                acc[exp] = c
        return cls(nvars, acc)

    @classmethod
    def variables(cls, nvars: int) -> list["SparsePoly"]:
        return [cls.variable(i, nvars) for i in range(nvars)]

    # Views

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial"""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.terms.values())

    def coefficient(self, exp: Sequence[int]) -> CycNum:
        return self.terms.get(tuple(exp), CycNum.zero(self.conductor))

    def sorted_terms(self) -> list[tuple[Exponent, CycNum]]:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def coefficient_vector(self, basis: Sequence[Exponent]) -> list[CycNum]:
        return [self.coefficient(m) for m in basis]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        if self.nvars != other.nvars or len(self.terms) != len(other.terms):
            return False
        a, b = _align(self, other)
        return a.terms == b.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms)))

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return "SparsePoly(%s)" % format_poly(self)

    # Arithmetic

    def embed(self, m: int) -> "SparsePoly":
        if m == self.conductor:
            return self
        return SparsePoly._trusted(self.nvars, {e: c.embed(m) for e, c in self.terms.items()}, m)

    def _coerce(self, other) -> "SparsePoly | None":
        if isinstance(other, SparsePoly):
            if other.nvars != self.nvars:
                raise PolynomialError("Variable counts differ: %d vs %d" % (self.nvars, other.nvars))
            return other
        if isinstance(other, (int, Fraction, CycNum)):
            return SparsePoly.constant(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = _align(self, other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            s = terms[e] + c if e in terms else c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return SparsePoly._trusted(self.nvars, terms, a.conductor)

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        return SparsePoly._trusted(self.nvars, {e: -c for e, c in self.terms.items()}, self.conductor)

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

    def scale(self, c: CycNum | int | Fraction) -> "SparsePoly":
        if not isinstance(c, CycNum):
            c = CycNum.from_fraction(c)
        if not c:
            return SparsePoly.zero(self.nvars, self.conductor)
        n = lcm(self.conductor, c.conductor)
        c = c.embed(n)
        return SparsePoly._trusted(self.nvars, {e: v.embed(n) * c for e, v in self.terms.items()}, n)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = _align(self, other)
        if len(a.terms) < len(b.terms):
            a, b = b, a
        terms: dict[Exponent, CycNum] = {}
        for eb, cb in b.terms.items():
            for ea, ca in a.terms.items():
                e = _add_exp(ea, eb)
                p = ca * cb
                if e in terms:
                    terms[e] = terms[e] + p
                else:
                    terms[e] = p
        return SparsePoly._trusted(self.nvars, {e: c for e, c in terms.items() if c}, a.conductor)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SparsePoly":
        if k < 0:
            raise PolynomialError("Negative power of a polynomial")
        result = SparsePoly.constant(self.nvars, CycNum.one(self.conductor))
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def galois(self, k: int) -> "SparsePoly":
        return SparsePoly._trusted(
            self.nvars, {e: c.galois_conjugate(k) for e, c in self.terms.items()}, self.conductor
        )

    def conj(self) -> "SparsePoly":
        return self.galois(self.conductor - 1)

    def diff(self, i: int) -> "SparsePoly":
        """Partial derivative in variable i"""
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                lowered = e[:i] + (e[i] - 1,) + e[i + 1:]
                terms[lowered] = c * e[i]
        return SparsePoly._trusted(self.nvars, terms, self.conductor)

    def gradient(self) -> list["SparsePoly"]:
        return [self.diff(i) for i in range(self.nvars)]

    def evaluate(self, point: Sequence[CycNum | int]) -> CycNum:
        if len(point) != self.nvars:
            raise PolynomialError("Point has %d coordinates, polynomial %d variables" % (len(point), self.nvars))
        values = [v if isinstance(v, CycNum) else CycNum.from_int(v) for v in point]
        n = lcm(self.conductor, *(v.conductor for v in values))
        values = [v.embed(n) for v in values]
        powers: list[dict[int, CycNum]] = [{0: CycNum.one(n)} for _ in values]

        def power(i: int, k: int) -> CycNum:
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * values[i]
            return cache[k]

        total = CycNum.zero(n)
        for e, c in self.terms.items():
            term = c.embed(n)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            total = total + term
        return total

    def homogeneous_part(self, d: int) -> "SparsePoly":
        return SparsePoly._trusted(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d}, self.conductor)

    def is_proportional(self, other: "SparsePoly") -> bool:
        """Nonzero scalar multiples of each other"""
        if self.is_zero() or other.is_zero() or set(self.terms) != set(other.terms):
            return False
        a, b = _align(self, other)
        first = next(iter(a.terms))
        ratio = a.terms[first] / b.terms[first]
        return all(a.terms[e] == b.terms[e] * ratio for e in a.terms)


def _align(a: SparsePoly, b: SparsePoly) -> tuple[SparsePoly, SparsePoly]:
    if a.conductor == b.conductor:
        return a, b
    n = lcm(a.conductor, b.conductor)
    return a.embed(n), b.embed(n)


def linear_form(coeffs: Sequence[CycNum | int | Fraction]) -> SparsePoly:
    nvars = len(coeffs)
    return SparsePoly.from_coefficients(
        nvars, ((tuple(1 if j == i else 0 for j in range(nvars)), c) for i, c in enumerate(coeffs))
    )


# Text format

def default_names(nvars: int) -> list[str]:
    if nvars == 3:
        return ["x", "y", "z"]
    return ["x%d" % (i + 1) for i in range(nvars)]


def _monomial_text(exp: Exponent, names: Sequence[str]) -> str:
    parts = []
    for name, k in zip(names, exp):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append("%s^%d" % (name, k))
    return "*".join(parts)


def format_poly(f: SparsePoly, names: Sequence[str] | None = None) -> str:
    """e.g. 2*x1^4 + 6*x1*x2*x3*x4 + x2^3*x3, with cyc(n; ...) for irrational coefficients"""
    names = names or default_names(f.nvars)
    if f.is_zero():
        return "0"
    pieces: list[tuple[bool, str]] = []
    for exp, c in f.sorted_terms():
        mono = _monomial_text(exp, names)
        if c.is_rational():
            value = c.to_fraction()
            negative = value < 0
            value = abs(value)
            if not mono:
                body = str(value)
            elif value == 1:
                body = mono
            else:
                body = "%s*%s" % (value, mono)
        else:
            negative = False
            body = format_cyc(c) + ("*" + mono if mono else "")
        pieces.append((negative, body))
    first_negative, text = pieces[0]
    text = "-" + text if first_negative else text
    for negative, body in pieces[1:]:
        text += (" - " if negative else " + ") + body
    return text


_CYC_START = re.compile(r"cyc\(\s*(\d+)\s*;")


def _extract_literals(text: str) -> tuple[str, list[CycNum]]:
    """Replace every cyc(n; ...) literal by a placeholder name"""
    out, values = [], []
    pos = 0
    while True:
        match = _CYC_START.search(text, pos)
        if not match:
            out.append(text[pos:])
            break
        depth, i = 1, match.end()
        while i < len(text) and depth:
            depth += {"(": 1, ")": -1}.get(text[i], 0)
            i += 1
        if depth:
            raise TextFormatError("Unbalanced cyc(...) literal in %r" % text)
        body = text[match.end():i - 1]
        values.append(parse_body(body, int(match.group(1))))
        out.append(text[pos:match.start()])
        out.append("(_c%d)" % (len(values) - 1))
        pos = i
    return "".join(out), values


def parse_poly(text: str, nvars: int, names: Sequence[str] | None = None) -> SparsePoly:
    names = list(names or default_names(nvars))
    if len(names) != nvars:
        raise TextFormatError("Expected %d variable names, got %d" % (nvars, len(names)))
    source, literals = _extract_literals(text)
    source = source.replace("^", "**").strip()
    if not source:
        raise TextFormatError("Empty polynomial text")
    symbols = [Symbol(name) for name in names]
    placeholders = [Symbol("_c%d" % i) for i in range(len(literals))]
    local = {name: s for name, s in zip(names, symbols)}
    local.update({str(p): p for p in placeholders})
    try:
        expr = parse_expr(source, local_dict=local, transformations=standard_transformations, evaluate=True)
        poly = Poly(expr, *(symbols + placeholders), domain="QQ")
    except (SympifyError, SyntaxError, TokenError, TypeError, BasePolynomialError) as e:
        raise TextFormatError("Cannot parse polynomial %r: %s" % (text, e)) from e

    conductor = lcm(1, *(v.conductor for v in literals))
    literals = [v.embed(conductor) for v in literals]
    items = []
    for monom, coeff in poly.terms():
        value = CycNum.from_fraction(Fraction(int(coeff.p), int(coeff.q)), conductor)
        for v, k in zip(literals, monom[nvars:]):
            if k:
                value = value * v ** k
        items.append((tuple(monom[:nvars]), value))
    return SparsePoly.from_coefficients(nvars, items)
