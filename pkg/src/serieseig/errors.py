"""Exception types raised by the solver layers."""


class SeriesEigError(Exception):
    """Base class for all package-specific errors."""


class DegreeMismatchError(SeriesEigError):
    """Series addition called with operands of different truncation degree."""


class ParityError(SeriesEigError):
    """Parity-sector operation requested on a problem without even-potential parity."""


class RecurrenceOverflowError(SeriesEigError):
    """Recurrence value left the representable exponent range."""

    def __init__(self, step: int, message: str | None = None):
        self.step = step
        super().__init__(message or f"recurrence overflow at iteration n={step}")


class ResonantIndicialError(SeriesEigError):
    """The coefficient of the highest derivative vanished at some order."""

    def __init__(self, step: int, message: str | None = None):
        self.step = step
        super().__init__(message or f"resonant indicial exponent at n={step}")


class IndeterminateBoundaryError(SeriesEigError):
    """Both termination rows vanish; boundary values cannot be extracted."""


class RefinementError(SeriesEigError):
    """Bisection lost its sign-change invariant and widening did not recover it."""


class OracleFailureError(SeriesEigError):
    """Shooting oracle found no matching-condition crossing near the guess."""


class DegenerateStateError(SeriesEigError):
    """Sampled eigenfunction is numerically zero; normalization impossible."""


class DomainError(SeriesEigError):
    """Evaluation point outside the problem's domain (e.g. r < 0 for radial)."""


class SpecFileError(SeriesEigError):
    """Problem-definition file failed to parse or validate."""

    def __init__(self, message: str, field: str | None = None):
        self.field = field
        super().__init__(message if field is None else f"{field}: {message}")


class UnsupportedLevelError(SeriesEigError):
    """Closed-form coupling values are only tabulated for levels j in {1, 2, 3}."""
