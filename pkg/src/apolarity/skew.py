"""Skew forms on cubics built from the inverse catalecticant, and the check that they kill the partials.

Quadric operators act on quadrics by differentiation. delta_F sends the operator
d^m to d^m F; P(q1, q2) applies delta_F^{-1}(q1) to q2. For each pair of
variables u < v the form

    omega_uv(c1, c2) = 2 [P(d_u c1, d_v c2) - P(d_v c1, d_u c2)]

is skew on cubics; every partial derivative of F must lie in its kernel.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from ..cyclotomic.field import CycNum
from ..errors import DegenerateQuarticError, SingularMatrixError
from ..invariants.poly import SparsePoly
from ..linalg.matrix import CycMatrix
from .catalecticant import CUBICS, QUADRICS, exponent_factorial, check_quartic

logger = logging.getLogger(__name__)


class QuadricPairing:
    def __init__(self, f: SparsePoly):
        check_quartic(f)
        self.form = f
        self.conductor = f.conductor
        rows = []
        for m in QUADRICS:
            image = f
            for i, k in enumerate(m):
                for _ in range(k):
                    image = image.diff(i)
            rows.append(image.coefficient_vector(QUADRICS))
        self.delta = CycMatrix.from_rows(rows, self.conductor)
        try:
            self.delta_inverse = self.delta.inverse()
        except SingularMatrixError as e:
            raise DegenerateQuarticError("The quartic is degenerate: %s" % f) from e
        self._weights = [exponent_factorial(m) for m in QUADRICS]

    def operator(self, q: SparsePoly) -> list[CycNum]:
        """Coefficients of delta_F^{-1}(q) on the operators d^m"""
        return list(self.delta_inverse.apply_row(q.embed(self.conductor).coefficient_vector(QUADRICS)))

    def pair(self, q1: SparsePoly, q2: SparsePoly) -> CycNum:
        d = self.operator(q1)
        values = q2.embed(self.conductor).coefficient_vector(QUADRICS)
        total = CycNum.zero(self.conductor)
        for di, w, v in zip(d, self._weights, values):
            if di and v:
                total = total + di * v * w
        return total

    def omega(self, u: int, v: int, c1: SparsePoly, c2: SparsePoly) -> CycNum:
        return (self.pair(c1.diff(u), c2.diff(v)) - self.pair(c1.diff(v), c2.diff(u))) * 2


@dataclass
class SkewFormCheck:
    nonzero_forms: list[tuple[int, int]] = field(default_factory=list)
    failures: list[tuple[int, int, int, tuple[int, ...]]] = field(default_factory=list)  # (u, v, partial, cubic)

    @property
    def holds(self) -> bool:
        return bool(self.nonzero_forms) and not self.failures

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "nonzero_forms": ["%d^%d" % uv for uv in self.nonzero_forms],
            "failures": len(self.failures),
        }


def skew_form_check(f: SparsePoly) -> SkewFormCheck:
    pairing = QuadricPairing(f)
    cubics = [SparsePoly.monomial(m) for m in CUBICS]
    partials = f.gradient()
    out = SkewFormCheck()
    for u, v in combinations(range(3), 2):
        for k, fk in enumerate(partials):
            for m, c in zip(CUBICS, cubics):
                if not pairing.omega(u, v, fk, c).is_zero():
                    out.failures.append((u, v, k, m))
        if any(not pairing.omega(u, v, a, b).is_zero() for a, b in combinations(cubics, 2)):
            out.nonzero_forms.append((u, v))
    logger.info("Skew-form check: %d nonzero forms, %d failures", len(out.nonzero_forms), len(out.failures))
    return out


def verify_spusk(f: SparsePoly) -> bool:
    """The image of W under the partials lies in the kernel of every omega_uv"""
    return skew_form_check(f).holds
