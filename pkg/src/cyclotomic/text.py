import re
from fractions import Fraction
from math import lcm
from tokenize import TokenError

from sympy import Poly, Symbol
from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import parse_expr, standard_transformations
from sympy.polys.polyerrors import BasePolynomialError

from ..errors import TextFormatError
from .field import CycNum

Z = Symbol("z")

_LITERAL = re.compile(r"^\s*cyc\(\s*(\d+)\s*;(.*)\)\s*$", re.DOTALL)


def _monomial(i: int) -> str:
    if i == 0:
        return ""
    if i == 1:
        return "z"
    return "z^%d" % i


def format_body(a: CycNum) -> str:
    """Polynomial in z with ascending exponents, e.g. 1/2 - 1/2*z^4"""
    parts = []
    for i, c in enumerate(a.num):
        if not c:
            continue
        coef = Fraction(c, a.den)
        mono = _monomial(i)
        if not mono:
            term = str(coef)
        elif coef == 1:
            term = mono
        elif coef == -1:
            term = "-" + mono
        else:
            term = "%s*%s" % (coef, mono)
        parts.append(term)
    if not parts:
        return "0"
    text = parts[0]
    for term in parts[1:]:
        text += " - " + term[1:] if term.startswith("-") else " + " + term
    return text


def format_cyc(a: CycNum) -> str:
    return "cyc(%d; %s)" % (a.conductor, format_body(a))


def parse_body(body: str, conductor: int) -> CycNum:
    """Parse a polynomial expression in z at the given conductor"""
    source = body.strip().replace("^", "**")
    if not source:
        raise TextFormatError("Empty cyclotomic expression")
    try:
        expr = parse_expr(
            source,
            local_dict={"z": Z},
            transformations=standard_transformations,
            evaluate=True,
        )
        poly = Poly(expr, Z, domain="QQ")
    except (SympifyError, SyntaxError, TokenError, TypeError, BasePolynomialError) as e:
        raise TextFormatError("Cannot parse %r: %s" % (body, e)) from e
    low_first = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
    den = lcm(*(c.denominator for c in low_first))
    vec = [int(c * den) for c in low_first]
    return CycNum.from_vector(conductor, vec, den)


def parse_cyc(text: str, default_conductor: int | None = None) -> CycNum:
    """Parse cyc(n; ...) or, with a default conductor, a bare z-expression"""
    match = _LITERAL.match(text)
    if match:
        return parse_body(match.group(2), int(match.group(1)))
    if default_conductor is None:
        raise TextFormatError("Expected cyc(n; ...) literal, got %r" % text)
    return parse_body(text, default_conductor)
