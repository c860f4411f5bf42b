"""Exception types shared across the package."""


class HmflowError(Exception):
    """Base class for all package-specific errors."""


class PoleSingular(HmflowError):
    """A chart operation was attempted at (or too close to) the excluded pole."""


class DegenerateSpec(HmflowError):
    """A rational map spec is degenerate (common roots, vanishing denominator)."""


class GluingMismatch(HmflowError):
    """Bubble gluing endpoints are too far apart for a short geodesic."""


class InvalidExponent(HmflowError):
    """Integral exponent outside its admissible range."""


class CircleOutOfRange(HmflowError):
    """A circle sample fell outside both chart grids."""


class StepTooLarge(HmflowError):
    """Requested flow time step violates the CFL stability bound."""


class NonFinite(HmflowError):
    """A field value became non-finite during time stepping."""


class RangeError(HmflowError):
    """Requested time or radius window is outside the available data."""


class InsufficientSpread(HmflowError):
    """Not enough samples, or not enough dynamic range, for a power-law fit."""


class WindowEmpty(HmflowError):
    """No usable rows in the requested fitting window."""


class InvalidParams(HmflowError):
    """Parameter combination outside the admissible domain of a check."""


class SpecFileError(HmflowError):
    """Map spec file failed to parse or validate."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
