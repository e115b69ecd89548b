"""Modular images of exact polynomials in prime-field rings with grevlex order."""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from sympy import factorint, nextprime
from sympy.ntheory import primitive_root
from sympy.polys.domains import GF
from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyElement, PolyRing

from ..cyclotomic.field import CycNum
from ..errors import BadPrimeError
from ..invariants.poly import Exponent, SparsePoly

logger = logging.getLogger(__name__)

DEFAULT_PRIMES = (31991, 65521)


@lru_cache(maxsize=None)
def prime_ring(p: int, nvars: int) -> PolyRing:
    """GF(p)[x1, ..., xn] ordered by grevlex"""
    return PolyRing(["x%d" % (i + 1) for i in range(nvars)], GF(p), grevlex)


@dataclass(frozen=True, eq=False)
class PrimeFieldPoly:
    prime: int
    nvars: int
    element: PolyElement

    @classmethod
    def from_terms(cls, p: int, nvars: int, terms: Mapping[Exponent, int]) -> "PrimeFieldPoly":
        ring = prime_ring(p, nvars)
        return cls(p, nvars, ring.from_dict({tuple(e): c % p for e, c in terms.items() if c % p}))

    @classmethod
    def variable(cls, p: int, i: int, nvars: int) -> "PrimeFieldPoly":
        return cls(p, nvars, prime_ring(p, nvars).gens[i])

    @property
    def ring(self) -> PolyRing:
        return self.element.ring

    @property
    def terms(self) -> dict[Exponent, int]:
        """Exponent -> residue in [1, p - 1]"""
        return {m: int(c) % self.prime for m, c in self.element.items()}

    def is_zero(self) -> bool:
        return not self.element

    @property
    def degree(self) -> int:
        return max((sum(m) for m in self.element), default=-1)

    @property
    def leading_monomial(self) -> Exponent:
        return self.element.LM

    def monic(self) -> "PrimeFieldPoly":
        if not self.element:
            return self
        return PrimeFieldPoly(self.prime, self.nvars, self.element.monic())

    def __eq__(self, other) -> bool:
        if not isinstance(other, PrimeFieldPoly):
            return NotImplemented
        return self.prime == other.prime and self.nvars == other.nvars and self.element == other.element

    def __hash__(self) -> int:
        return hash((self.prime, self.nvars, frozenset(self.terms.items())))

    def __len__(self) -> int:
        return len(self.element)

    def __str__(self) -> str:
        return str(self.element.as_expr())

    def __repr__(self) -> str:
        return "PrimeFieldPoly(p=%d, %s)" % (self.prime, self)


def _has_exact_order(z: int, n: int, p: int) -> bool:
    if pow(z, n, p) != 1:
        return False
    return all(pow(z, n // q, p) != 1 for q in factorint(n))


def zeta_image(p: int, n: int, k: int = 1) -> int:
    """An element of exact order n in GF(p); other units k give the Galois conjugates"""
    if (p - 1) % n:
        raise BadPrimeError("%d is not 1 mod %d, so GF(%d) has no primitive %d-th root of unity" % (p, n, p, n))
    z = pow(primitive_root(p), (p - 1) // n * k, p)
    if not _has_exact_order(z, n, p):
        raise BadPrimeError("Exponent %d is not a unit mod %d" % (k, n))
    return z


def reduce_number(c: CycNum, p: int, zeta: int) -> int:
    if c.den % p == 0:
        raise BadPrimeError("%d divides the denominator of %s" % (p, c))
    value = 0
    power = 1
    for a in c.num:
        if a:
            value = (value + a * power) % p
        power = power * zeta % p
    return value * pow(c.den, -1, p) % p


def reduce_mod_p(f: SparsePoly, p: int, zeta: int | None = None) -> PrimeFieldPoly:
    """Image of f under Z[zeta_n][1/den] -> GF(p), zeta_n -> zeta"""
    n = f.conductor
    if zeta is None:
        zeta = zeta_image(p, n) if n > 1 else 1
    elif not _has_exact_order(zeta % p, n, p):
        raise BadPrimeError("%d does not have order %d mod %d" % (zeta, n, p))
    image = PrimeFieldPoly.from_terms(p, f.nvars, {e: reduce_number(c, p, zeta) for e, c in f.terms.items()})
    if image.degree != f.degree:
        raise BadPrimeError("Degree drops from %d to %d mod %d" % (f.degree, image.degree, p))
    return image


def good_primes(count: int, conductor: int = 1, start: int = DEFAULT_PRIMES[0] - 1) -> list[int]:
    """The first `count` primes above `start` that are 1 mod the conductor"""
    out = []
    p = start
    while len(out) < count:
        p = nextprime(p)
        if (p - 1) % conductor == 0:
            out.append(p)
    return out


def primes_for(conductor: int, primes: Iterable[int], minimum: int = 2) -> list[int]:
    """Supplied primes usable at this conductor, topped up to `minimum` with fresh ones"""
    primes = list(primes)
    usable = [p for p in primes if (p - 1) % conductor == 0]
    dropped = [p for p in primes if (p - 1) % conductor]
    if dropped:
        logger.warning("Primes %s are not 1 mod %d; skipped", dropped, conductor)
    if len(usable) < minimum:
        start = max(usable, default=DEFAULT_PRIMES[0] - 1)
        extra = [p for p in good_primes(minimum, conductor, start) if p not in usable]
        usable.extend(extra[: minimum - len(usable)])
    return usable
