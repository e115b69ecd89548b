class Klein168Error(Exception):
    """Base class for every library error"""


# Arithmetic
class ConductorError(Klein168Error):
    """Conductors cannot be aligned, or a Galois exponent is not a unit"""


class TextFormatError(Klein168Error, ValueError):
    """Malformed cyc(...) literal or polynomial text"""


# Linear algebra
class ShapeError(Klein168Error):
    pass


class SingularMatrixError(Klein168Error):
    pass


# Groups
class GroupTooLargeError(Klein168Error):
    """Closure exceeded the configured cap"""


class NotASubgroupError(Klein168Error):
    pass


class IsomorphismNotFoundError(Klein168Error):
    pass


# Characters
class CharacterError(Klein168Error):
    """Norm or orthogonality failure, non-integral multiplicity, missing table"""


# Polynomials and geometry
class PolynomialError(Klein168Error):
    pass


class GeometryError(Klein168Error):
    """Orbit census disagrees with the expected classification"""


class ArgumentError(Klein168Error, ValueError):
    pass


# Groebner
class BadPrimeError(Klein168Error):
    pass


class PrimeDisagreementError(Klein168Error):
    def __init__(self, message: str, per_prime: dict[int, int]):
        super().__init__(message)
        self.per_prime = per_prime


# Apolarity
class DegenerateQuarticError(Klein168Error):
    pass


class ProportionalLinesError(Klein168Error):
    pass


# Data and report
class DataFileError(Klein168Error):
    pass


class UnknownCheckError(Klein168Error):
    def __init__(self, unknown: list[str]):
        super().__init__("Unknown check id(s): %s" % ", ".join(unknown))
        self.unknown = unknown
