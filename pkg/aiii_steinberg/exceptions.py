"""Exceptions raised by the AIII Steinberg orbit engine."""


class SteinbergError(Exception):
    """Base class for all errors raised by this package."""


class SteinbergValidationError(SteinbergError, ValueError):
    """Raise if an input value violates its invariants."""


class SteinbergRefusalError(SteinbergError):
    """Raise if a request exceeds the configured size bounds."""


class SteinbergInconsistencyError(SteinbergError):
    """Raise if two computations that must agree do not.

    This always signals a bug, never bad input.
    """


class SteinbergGenericityError(SteinbergError):
    """Raise if random sampling kept producing incomparable results."""


class SteinbergBijectionError(SteinbergInconsistencyError):
    """Raise if an inverse lookup finds no preimage or more than one."""
