"""The named invariants: the forms of degrees 4, 6, 8, 8, 14 in four variables and the Klein quartic."""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from ..config import DATA_DIR
from ..cyclotomic.field import CycNum
from ..errors import DataFileError, PolynomialError, TextFormatError
from ..groups.standard import plane_generators, sl_generators, xy3_generators
from ..linalg.matrix import CycMatrix
from .action import hessian, is_invariant
from .poly import SparsePoly, format_poly, parse_poly

logger = logging.getLogger(__name__)

EPSILON = CycNum.from_vector(7, [0, 1, 1, 0, 1])  # z + z^2 + z^4 = (-1 + sqrt(-7))/2


def space_forms() -> dict[str, SparsePoly]:
    x1, x2, x3, x4 = SparsePoly.variables(4)
    a = x2 * x3 * x4
    b = x2 ** 3 * x3 + x3 ** 3 * x4 + x4 ** 3 * x2
    c = x2 ** 2 * x3 ** 3 + x3 ** 2 * x4 ** 3 + x4 ** 2 * x2 ** 3
    d = a ** 2 + x2 * x3 ** 5 + x3 * x4 ** 5 + x4 * x2 ** 5
    e = 7 * a * b + x2 ** 7 + x3 ** 7 + x4 ** 7

    phi4 = 2 * x1 ** 4 + 6 * a * x1 + b
    phi6 = 8 * x1 ** 6 - 20 * a * x1 ** 3 - 10 * b * x1 ** 2 - 10 * c * x1 - 14 * a ** 2 - d
    phi8 = (x1 ** 8 - 2 * a * x1 ** 5 + b * x1 ** 4 + 2 * c * x1 ** 3
            + (6 * a ** 2 + d) * x1 ** 2 + 2 * a * b * x1 + a * c)
    phi8p = x1 ** 8 + 14 * a * x1 ** 5 - 7 * b * x1 ** 4 + 14 * c * x1 ** 3 - 7 * d * x1 ** 2 + e * x1
    phi14 = (48 * x1 ** 14 + 168 * a * x1 ** 11 + 308 * b * x1 ** 10 - 1596 * c * x1 ** 9
             + 126 * (42 * a ** 2 + 11 * d) * x1 ** 8
             - 8 * (37 * e + 490 * a * b) * x1 ** 7
             + 196 * (12 * a * c + 5 * b ** 2) * x1 ** 6
             + 196 * (15 * a * d - 13 * b * c) * x1 ** 5
             + 14 * (182 * c ** 2 - 86 * a * e - 7 * b * d) * x1 ** 4
             + 28 * (11 * b * e - 42 * c * d) * x1 ** 3
             + 14 * (21 * d ** 2 - 16 * c * e) * x1 ** 2
             + 14 * d * e * x1
             - e ** 2)
    return {"phi4": phi4, "phi6": phi6, "phi8": phi8, "phi8p": phi8p, "phi14": phi14}


def klein_quartic_eps() -> SparsePoly:
    """x^4 + y^4 + z^4 + 3*eps*(x^2 y^2 + x^2 z^2 + y^2 z^2)"""
    x, y, z = SparsePoly.variables(3)
    return x ** 4 + y ** 4 + z ** 4 + (x ** 2 * y ** 2 + x ** 2 * z ** 2 + y ** 2 * z ** 2).scale(EPSILON * 3)


def klein_quartic_xy3() -> SparsePoly:
    x, y, z = SparsePoly.variables(3)
    return x * y ** 3 + y * z ** 3 + z * x ** 3


@dataclass
class InvariantCatalog:
    phi4: SparsePoly
    phi6: SparsePoly
    phi8: SparsePoly
    phi8p: SparsePoly
    phi14: SparsePoly
    klein: SparsePoly  # eps-model, invariant under <A^T, B^T, C^T, D^T>
    klein_xy3: SparsePoly
    hessian: SparsePoly  # of the eps-model
    hessian_xy3: SparsePoly
    symmetries: dict[str, list[CycMatrix]] = field(default_factory=dict, repr=False)

    SPACE = ("phi4", "phi6", "phi8", "phi8p", "phi14")
    DEGREES = {"phi4": 4, "phi6": 6, "phi8": 8, "phi8p": 8, "phi14": 14,
               "klein": 4, "klein_xy3": 4, "hessian": 6, "hessian_xy3": 6}

    def __getitem__(self, name: str) -> SparsePoly:
        if name not in self.DEGREES:
            raise PolynomialError("No invariant named %r" % name)
        return getattr(self, name)

    def entries(self) -> dict[str, SparsePoly]:
        return {name: getattr(self, name) for name in self.DEGREES}

    def verify(self, names: list[str] | None = None) -> "InvariantCatalog":
        """Degree and invariance of every entry under its own symmetry generators"""
        for name in names or list(self.DEGREES):
            f = self[name]
            if f.degree != self.DEGREES[name] or not f.is_homogeneous():
                raise PolynomialError("%s has degree %d, expected %d" % (name, f.degree, self.DEGREES[name]))
            if not is_invariant(f, self.symmetries[name]):
                raise PolynomialError("%s is not invariant under its generators" % name)
            logger.debug("%s: %d terms, invariant", name, len(f))
        return self


@lru_cache(maxsize=None)
def build_klein_invariants(data_dir: Path = DATA_DIR, verify: bool = True) -> InvariantCatalog:
    forms = space_forms()
    klein = klein_quartic_eps()
    xy3 = klein_quartic_xy3()
    catalog = InvariantCatalog(
        klein=klein,
        klein_xy3=xy3,
        hessian=hessian(klein),
        hessian_xy3=hessian(xy3),
        **forms,
    )
    space = list(sl_generators(data_dir))
    plane = list(plane_generators(data_dir))
    own = list(xy3_generators(data_dir))
    catalog.symmetries = {name: space for name in InvariantCatalog.SPACE}
    catalog.symmetries.update({"klein": plane, "hessian": plane, "klein_xy3": own, "hessian_xy3": own})
    if verify:
        catalog.verify()
    logger.info("Invariant catalog built (%s)", ", ".join("%s:%d" % (n, len(f)) for n, f in catalog.entries().items()))
    return catalog


def leading_coefficient_matches(f: SparsePoly, matrix: CycMatrix) -> bool:
    """f at the first row of M equals the x1^d coefficient of f; a cheap necessary condition for invariance"""
    d = f.degree
    lead = (d,) + (0,) * (f.nvars - 1)
    return (f.evaluate(matrix.row(0)) - f.coefficient(lead)).is_zero()


# Text files

def dumps_catalog(catalog: InvariantCatalog) -> str:
    lines = ["# name = polynomial"]
    for name, f in catalog.entries().items():
        lines.append("%s = %s" % (name, format_poly(f)))
    return "\n".join(lines) + "\n"


def loads_catalog(text: str, source: str = "<string>") -> dict[str, SparsePoly]:
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, sep, body = line.partition("=")
        name = name.strip()
        if not sep or name not in InvariantCatalog.DEGREES:
            raise DataFileError("%s:%d: expected '<invariant> = <polynomial>'" % (source, lineno))
        nvars = 4 if name in InvariantCatalog.SPACE else 3
        try:
            out[name] = parse_poly(body, nvars)
        except TextFormatError as e:
            raise DataFileError("%s:%d: %s" % (source, lineno, e)) from e
    return out
