"""Exception hierarchy shared by every module."""


class ParikhError(Exception):
    """Base class for all domain errors raised by this package."""


class DimensionError(ParikhError, ValueError):
    """Vectors or bases of incompatible dimension were combined."""


class DependentGeneratorsError(ParikhError, ValueError):
    """An operation that needs linearly independent generators got dependent ones."""


class ExactModeTooLarge(ParikhError):
    """The theoretical box of exact normalization is too large to enumerate."""


class Inconclusive(ParikhError):
    """A negative answer came from an unverified under-approximation."""


class FormatError(ParikhError, ValueError):
    """A serialized input could not be parsed."""
