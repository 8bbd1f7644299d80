"""Exception types raised by the public API."""


class EntcatError(Exception):
    """Base class for all errors raised by this package."""


class EmptyInputError(EntcatError):
    """A spectrum was constructed from an empty coefficient list."""


class NegativeEntryError(EntcatError):
    """A coefficient lies below -epsilon."""


class NotNormalizedError(EntcatError):
    """Coefficients do not sum to 1 within epsilon."""


class DimTooSmallError(EntcatError):
    """Requested padding dimension is smaller than the current one."""


class SizeCapExceededError(EntcatError):
    """A tensor power would exceed the configured entry cap."""


class InvalidProbabilityError(EntcatError):
    """A probability argument lies outside (0, 1]."""


class NotIncomparableError(EntcatError):
    """The pair is comparable in the wrong direction, so catalysis is moot."""
