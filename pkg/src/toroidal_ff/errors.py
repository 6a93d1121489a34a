"""Exception hierarchy shared by all modules."""


class ToroidalError(Exception):
    """Base class for errors raised by this package."""


class ContractViolation(ToroidalError, ValueError):
    """An operation was called outside its documented domain."""


class ResourceLimitError(ToroidalError):
    """A computation would exceed the desk-scale size guard."""


class InvariantViolation(ToroidalError):
    """An internal consistency check failed."""


class TheoremViolation(InvariantViolation):
    """A computed quantity disagrees with a proven identity."""


class PrecisionError(ToroidalError):
    """Floating point work could not be resolved at the requested precision."""


class PoleError(ToroidalError, ZeroDivisionError):
    """Evaluation at a pole of a principal L-function."""

    def __init__(self, message, order=1):
        super().__init__(message)
        self.order = order
