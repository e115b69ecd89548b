"""Buchberger's algorithm over GF(p) in grevlex, with the product and chain criteria."""
import heapq
import logging
from dataclasses import dataclass
from typing import Sequence

from sympy.polys.monomials import monomial_div, monomial_divides, monomial_lcm
from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyElement

from ..errors import PolynomialError
from ..invariants.poly import Exponent
from .modular import PrimeFieldPoly

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class GroebnerBasis:
    prime: int
    nvars: int
    polys: list[PrimeFieldPoly]  # reduced, monic, ascending leading monomials
    order: str = "grevlex"

    @property
    def leading_monomials(self) -> list[Exponent]:
        return [g.leading_monomial for g in self.polys]

    def __len__(self) -> int:
        return len(self.polys)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return (self.prime, self.nvars, self.order) == (other.prime, other.nvars, other.order) and self.polys == other.polys

    def is_unit(self) -> bool:
        return any(not any(m) for m in self.leading_monomials)

    def reduce(self, f: PrimeFieldPoly) -> PrimeFieldPoly:
        """Normal form of f"""
        if not self.polys:
            return f
        return PrimeFieldPoly(self.prime, self.nvars, f.element.rem([g.element for g in self.polys]))

    def contains(self, f: PrimeFieldPoly) -> bool:
        return self.reduce(f).is_zero()


def _lm(f: PolyElement) -> Exponent:
    return f.LM


def _coprime(a: Exponent, b: Exponent) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def s_polynomial(f: PolyElement, g: PolyElement) -> PolyElement:
    """S-polynomial of two monic polynomials"""
    lcm = monomial_lcm(_lm(f), _lm(g))
    return f.mul_monom(monomial_div(lcm, _lm(f))) - g.mul_monom(monomial_div(lcm, _lm(g)))


def _pair(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


def _interreduce(basis: list[PolyElement]) -> list[PolyElement]:
    """Minimal, then fully reduced, sorted by leading monomial"""
    minimal: list[PolyElement] = []
    for f in sorted(basis, key=lambda f: grevlex(_lm(f))):
        if not any(monomial_divides(_lm(g), _lm(f)) for g in minimal):
            minimal.append(f)
    reduced = []
    for i, f in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        reduced.append(f.rem(others).monic() if others else f.monic())
    return sorted(reduced, key=lambda f: grevlex(_lm(f)))


def buchberger(gens: Sequence[PrimeFieldPoly]) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by gens"""
    if not gens:
        raise PolynomialError("Empty generator list")
    p, nvars = gens[0].prime, gens[0].nvars
    if any(g.prime != p or g.nvars != nvars for g in gens):
        raise PolynomialError("Generators live in different rings")
    basis: list[PolyElement] = []
    queue: list[tuple[int, int, int]] = []  # (lcm degree, j, i) with i < j
    pending: set[tuple[int, int]] = set()

    def add(h: PolyElement) -> None:
        j = len(basis)
        basis.append(h)
        for i in range(j):
            lcm = monomial_lcm(_lm(basis[i]), _lm(h))
            heapq.heappush(queue, (sum(lcm), j, i))
            pending.add((i, j))

    def chain_skips(i: int, j: int) -> bool:
        lcm = monomial_lcm(_lm(basis[i]), _lm(basis[j]))
        for k in range(len(basis)):
            if k in (i, j) or not monomial_divides(_lm(basis[k]), lcm):
                continue
            if _pair(i, k) not in pending and _pair(j, k) not in pending:
                return True
        return False

    for g in sorted((g.element.monic() for g in gens if g.element), key=lambda f: grevlex(_lm(f))):
        r = g.rem(basis) if basis else g
        if r:
            add(r.monic())
    if not basis:
        return GroebnerBasis(p, nvars, [])

    reductions = zeros = 0
    degree = -1
    while queue:
        d, j, i = heapq.heappop(queue)
        pending.discard((i, j))
        if d != degree:
            degree = d
            logger.debug("GF(%d) Buchberger: degree %d, basis %d, pairs %d", p, d, len(basis), len(queue))
        if _coprime(_lm(basis[i]), _lm(basis[j])) or chain_skips(i, j):
            continue
        reductions += 1
        h = s_polynomial(basis[i], basis[j]).rem(basis)
        if not h:
            zeros += 1
            continue
        add(h.monic())
        if not any(_lm(h)):
            break  # unit ideal

    reduced = _interreduce(basis)
    logger.debug("GF(%d) Buchberger: %d reductions (%d to zero), reduced basis of %d", p, reductions, zeros, len(reduced))
    return GroebnerBasis(p, nvars, [PrimeFieldPoly(p, nvars, f) for f in reduced])


def is_groebner(basis: GroebnerBasis) -> bool:
    """Every S-polynomial reduces to zero"""
    elements = [g.element for g in basis.polys]
    for j in range(len(elements)):
        for i in range(j):
            if s_polynomial(elements[i], elements[j]).rem(elements):
                return False
    return True
