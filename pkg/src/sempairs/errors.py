"""Exceptions shared across the package."""


class SempairsError(Exception):
    """Base class for every error this package raises on purpose."""


class ZeroColumn(SempairsError):
    """A configuration matrix has a zero column."""

    def __init__(self, index: int):
        self.index = index
        super().__init__("column %d of the matrix is zero" % index)


class NotStronglyConvex(SempairsError):
    """The cone of the matrix contains a line.

    ``certificate`` is a nonzero nonnegative integer vector u with A*u = 0,
    which is exactly a witness that the cone is not pointed.
    """

    def __init__(self, certificate):
        self.certificate = tuple(certificate)
        super().__init__(
            "cone is not strongly convex: A*u = 0 for nonnegative u = %s"
            % (self.certificate,)
        )


class OutsideCone(SempairsError):
    """A point handed to a face lookup lies outside the real cone."""


class UnboundedFreePart(SempairsError):
    """Free variables of a system are not determined by the nonnegative ones."""


class PointNotInSemigroup(SempairsError):
    """A pair root (or similar) is not an element of the semigroup."""


class FaceMismatch(SempairsError):
    """A face argument is not a face of the configuration, or two pair faces
    that must agree do not."""


class GeneratorOutsideSemigroup(SempairsError):
    """An ideal generator degree is not an element of the semigroup."""


class FaceNotContained(SempairsError):
    """pair_difference needs the minuend face inside the subtrahend face."""


class NotACover(SempairsError):
    """Verification sampling found a standard monomial outside the cover."""


class FaceNotAssociated(SempairsError):
    """The requested face is not an associated prime of the ideal."""


class BudgetExceeded(SempairsError):
    """A step budget ran out before the computation finished."""


class IterationBudgetExceeded(BudgetExceeded):
    """An iteration budget (refinement rounds, generator ascent) ran out."""


class UnsupportedDimension(SempairsError):
    """The 2d renderer got a configuration that is not 2-dimensional."""


class ParseError(SempairsError):
    """An input file is not valid JSON or does not match its schema."""


class ValidationError(SempairsError):
    """Input data parsed but is semantically unusable."""
