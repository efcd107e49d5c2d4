"""Exception hierarchy.

All library errors derive from ChangekitError so the CLI can map them to
stable exit codes: validation/parse problems exit 1, internal numerical
failures exit 2.
"""


class ChangekitError(Exception):
    """Base class for all changekit errors."""


class ValidationError(ChangekitError, ValueError):
    """Input data violates a type invariant (non-positive value, duplicate label, ...)."""


class ParseError(ChangekitError, ValueError):
    """Malformed CSV input; carries the offending line number in the message."""


class DomainError(ChangekitError, ValueError):
    """Arguments are outside the mathematical domain of an operation."""


class StagnantPairError(DomainError):
    """A pair with x == y where a strict change is required."""


class EqualPastValuesError(DomainError):
    """Calibration pairs share the same past value, making lambda indeterminate."""


class SignMismatchError(DomainError):
    """Calibration pairs change in opposite directions."""


class NumericalError(ChangekitError, ArithmeticError):
    """An internal numerical check failed (non-finite result, broken postcondition)."""
