"""Ideal dimension from the leading-term staircase, over several primes."""
import logging
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import lcm
from typing import Sequence

from sympy import Poly, symbols

from ..errors import PolynomialError, PrimeDisagreementError
from ..invariants.poly import Exponent, SparsePoly
from .buchberger import GroebnerBasis, buchberger
from .modular import DEFAULT_PRIMES, good_primes, primes_for, reduce_mod_p, zeta_image

logger = logging.getLogger(__name__)

_t = symbols("t")


# Monomial ideals

def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimalize(monos: Sequence[Exponent]) -> tuple[Exponent, ...]:
    """Minimal generators of the monomial ideal, sorted"""
    out: list[Exponent] = []
    for m in sorted(set(monos), key=lambda e: (sum(e), e)):
        if not any(_divides(g, m) for g in out):
            out.append(m)
    return tuple(sorted(out))


def independent_set_dimension(leading: Sequence[Exponent], nvars: int) -> int:
    """Largest set of variables containing the support of no leading monomial; -1 for the unit ideal"""
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in minimalize(leading)]
    if any(not s for s in supports):
        return -1
    for size in range(nvars, -1, -1):
        for subset in combinations(range(nvars), size):
            chosen = set(subset)
            if not any(s <= chosen for s in supports):
                return size
    return 0


def _pivot_variable(monos: tuple[Exponent, ...]) -> int | None:
    """A variable shared by two generators, the most frequent one; None if generators are coprime"""
    nvars = len(monos[0])
    counts = [sum(1 for m in monos if m[i]) for i in range(nvars)]
    best = max(range(nvars), key=lambda i: counts[i])
    return best if counts[best] > 1 else None


@lru_cache(maxsize=None)
def hilbert_numerator(monos: tuple[Exponent, ...], nvars: int) -> Poly:
    """N(t) with HS(S/M) = N(t) / (1 - t)^nvars, by pivoting on a shared variable"""
    if not monos:
        return Poly(1, _t)
    if any(not any(m) for m in monos):
        return Poly(0, _t)
    i = _pivot_variable(monos)
    if i is None:
        out = Poly(1, _t)
        for m in monos:
            out = out * Poly(1 - _t ** sum(m), _t)
        return out
    x = tuple(1 if k == i else 0 for k in range(nvars))
    added = minimalize([m for m in monos if not m[i]] + [x])
    quotient = minimalize([tuple(e - 1 if k == i and e else e for k, e in enumerate(m)) for m in monos])
    return hilbert_numerator(added, nvars) + Poly(_t, _t) * hilbert_numerator(quotient, nvars)


def hilbert_dimension(leading: Sequence[Exponent], nvars: int) -> int:
    """nvars minus the order of vanishing of the numerator at t = 1; -1 for the unit ideal"""
    numerator = hilbert_numerator(minimalize(leading), nvars)
    if numerator.is_zero:
        return -1
    one_minus_t = Poly(1 - _t, _t)
    order = 0
    while True:
        q, r = numerator.div(one_minus_t)
        if not r.is_zero:
            break
        numerator = q
        order += 1
    return nvars - order


def affine_dimension(basis: GroebnerBasis) -> int:
    """Krull dimension of the affine cone, computed two ways"""
    leading = basis.leading_monomials
    by_sets = independent_set_dimension(leading, basis.nvars)
    by_series = hilbert_dimension(leading, basis.nvars)
    if by_sets != by_series:
        raise PolynomialError("Staircase dimension %d, Hilbert series dimension %d" % (by_sets, by_series))
    return by_sets


# Over several primes

@dataclass
class DimensionReport:
    dimension: int  # projective; -1 means empty
    primes: list[int]
    per_prime: dict[int, int] = field(default_factory=dict)
    basis_sizes: dict[int, int] = field(default_factory=dict)
    timings: dict[int, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "primes": self.primes,
            "basis_size": {str(p): n for p, n in self.basis_sizes.items()},
            "seconds": {str(p): round(s, 3) for p, s in self.timings.items()},
        }


def _check_gens(gens: Sequence[SparsePoly]) -> int:
    if not gens:
        raise PolynomialError("Empty generator list")
    nvars = gens[0].nvars
    for f in gens:
        if f.nvars != nvars:
            raise PolynomialError("Generators in %d and %d variables" % (nvars, f.nvars))
        if not f.is_homogeneous():
            raise PolynomialError("Generator %s is not homogeneous" % f)
    return lcm(*(f.conductor for f in gens))


def groebner_mod_p(gens: Sequence[SparsePoly], p: int, k: int = 1) -> GroebnerBasis:
    """Reduced basis of the modular image; k picks the image of the root of unity"""
    n = lcm(*(f.conductor for f in gens))
    zeta = zeta_image(p, n, k) if n > 1 else 1
    return buchberger([reduce_mod_p(f.embed(n), p, zeta) for f in gens])


def _dimension_at(gens: Sequence[SparsePoly], p: int, report: DimensionReport) -> int:
    start = time.perf_counter()
    basis = groebner_mod_p(gens, p)
    dim = affine_dimension(basis)
    report.per_prime[p] = dim
    report.basis_sizes[p] = len(basis)
    report.timings[p] = time.perf_counter() - start
    logger.info("GF(%d): basis of %d, affine dimension %d (%.2fs)", p, len(basis), dim, report.timings[p])
    return dim


def ideal_dimension(gens: Sequence[SparsePoly], primes: Sequence[int] = DEFAULT_PRIMES) -> DimensionReport:
    """Projective dimension of V(gens); primes that disagree trigger one more prime and an error"""
    conductor = _check_gens(gens)
    usable = primes_for(conductor, primes)
    report = DimensionReport(dimension=-1, primes=list(usable))
    for p in usable:
        _dimension_at(gens, p, report)
    if len(set(report.per_prime.values())) > 1:
        extra = good_primes(1, conductor, max(usable))[0]
        logger.warning("Primes disagree on the dimension (%s); adding %d", report.per_prime, extra)
        report.primes.append(extra)
        _dimension_at(gens, extra, report)
        raise PrimeDisagreementError("Dimension differs across primes: %s" % report.per_prime, dict(report.per_prime))
    affine = next(iter(report.per_prime.values()))
    report.dimension = max(affine - 1, -1)
    return report


def projective_dimension(gens: Sequence[SparsePoly], primes: Sequence[int] = DEFAULT_PRIMES) -> int:
    return ideal_dimension(gens, primes).dimension


def singular_ideal(f: SparsePoly) -> list[SparsePoly]:
    return [f] + [g for g in f.gradient() if g]


def is_smooth_hypersurface(f: SparsePoly, primes: Sequence[int] = DEFAULT_PRIMES) -> bool:
    """f and its partials have no common projective zero"""
    if f.is_zero() or not f.is_homogeneous():
        raise PolynomialError("Smoothness needs a nonzero homogeneous polynomial")
    return projective_dimension(singular_ideal(f), primes) == -1
