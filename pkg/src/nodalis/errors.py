"""Exception hierarchy shared by every module."""


class NodalisError(Exception):
    """Base class for all library errors."""


class FieldError(NodalisError, ValueError):
    """Invalid field construction or coercion."""


class NeedsExtension(NodalisError):
    """A square root of the base non-square ``d`` is required to continue."""

    def __init__(self, d, message: str = ""):
        self.d = d
        super().__init__(message or f"needs extension by sqrt({d})")


class NotSquareError(NodalisError, ValueError):
    """A power series is not a square.

    ``reason`` is ``"odd_order"`` or ``"leading_coeff_not_square"``; ``value``
    holds the order resp. offending leading coefficient.
    """

    def __init__(self, reason: str, value):
        self.reason = reason
        self.value = value
        super().__init__(f"not a square: {reason} ({value})")


class InsufficientPrecision(NodalisError):
    """The truncation order is too low to decide; escalate and retry."""


class PreconditionError(NodalisError, ValueError):
    """A geometric precondition (node, non-tangent axis, ...) is violated."""


class ConsistencyError(NodalisError, AssertionError):
    """Two computations that must agree did not."""


class OracleError(NodalisError):
    """The independent oracle could not produce a verdict."""


class ParseError(NodalisError, ValueError):
    """Malformed polynomial text."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)
