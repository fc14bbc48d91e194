"""Exception hierarchy shared by the library and the command line."""


class XpolyError(Exception):
    """Base class for every error raised by xpoly."""


class InvalidGaps(XpolyError, ValueError):
    pass


class ModulusMismatch(XpolyError, ValueError):
    pass


class DuplicateCycle(XpolyError, ValueError):
    pass


class UnknownVertex(XpolyError, KeyError):
    pass


class EmptyComplex(XpolyError, ValueError):
    pass


class NotPseudomanifold(XpolyError, ValueError):
    pass


class IneligibleK(XpolyError, ValueError):
    """The requested dimension is outside the range an operation supports."""


class ConstructionFailure(XpolyError):
    """Neither the closed-form grouping nor the search produced a partition."""


class NoPartitionFound(ConstructionFailure):
    pass


class SearchTooLarge(ConstructionFailure):
    pass


class VerificationError(XpolyError):
    """A supplied partition was rejected.

    ``block`` is the zero-based index of the offending block when the failure
    can be pinned to one, otherwise ``None``.
    """

    kind = "verification-failure"

    def __init__(self, message: str, block: int | None = None):
        super().__init__(message)
        self.block = block


class CoverageGap(VerificationError):
    kind = "coverage-gap"


class CoverageOverlap(VerificationError):
    kind = "coverage-overlap"


class CertificationFailure(VerificationError):
    kind = "certification-failure"


class SkeletonViolation(VerificationError):
    kind = "skeleton-violation"


class ParseError(XpolyError, ValueError):
    """Input could not be parsed; ``line``/``column`` are 1-based when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column
