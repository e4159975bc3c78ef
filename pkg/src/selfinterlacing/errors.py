"""Exception types shared by every module of the package."""


class SIError(Exception):
    """Base class for all errors raised by selfinterlacing."""


class ParseError(SIError, ValueError):
    pass


class DomainError(SIError, ValueError):
    """An argument lies outside the domain of the operation."""


class DegenerateError(DomainError):
    """The input hits a degenerate case (zero denominator, zero minor, ...)."""


class NoStieltjesExpansion(DegenerateError):
    """The Euclidean ladder broke: some Hurwitz minor of the source vanishes."""


class EndpointError(DomainError):
    """An interval endpoint is itself a root."""


class Indeterminate(SIError):
    """A floating point check cannot decide (e.g. a tangent evaluated near a pole)."""
