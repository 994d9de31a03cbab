"""Exception types shared across the library."""


class GeneralizedInverseError(Exception):
    """Base class for every error raised by this package."""


class ShapeMismatch(GeneralizedInverseError):
    """Operands have incompatible dimensions."""


class NotSquare(GeneralizedInverseError):
    """A square matrix was required."""


class FactorizationFailure(GeneralizedInverseError):
    """The SVD did not converge; the input is numerically pathological."""


class NotComplementary(GeneralizedInverseError):
    """Two subspaces do not decompose the ambient space as a direct sum."""


class NotExistent(GeneralizedInverseError):
    """The requested inverse does not exist for the given data.

    Carries optional diagnostics: an existence report, the list of violated
    block conditions, or the rank triple that failed.
    """

    def __init__(self, message, report=None, violated=None, ranks=None):
        super().__init__(message)
        self.report = report
        self.violated = tuple(violated) if violated else ()
        self.ranks = ranks


class IndexTooLarge(GeneralizedInverseError):
    """The matrix index exceeds what the requested inverse allows."""


class NotOuter(GeneralizedInverseError):
    """Candidate fails the outer-inverse equation XAX = X."""


class NotInner(GeneralizedInverseError):
    """Candidate fails the inner-inverse equation AXA = A."""


class BadParams(GeneralizedInverseError):
    """Invalid or missing parameters for the requested operation."""
