"""Exception types raised across the package.

Every error raised deliberately by this package derives from SpecGraphError,
so callers can catch one base class at an API boundary.  Most also derive
from ValueError because they signal bad inputs.
"""


class SpecGraphError(Exception):
    """Base class for all errors raised by this package."""


class InvalidDataError(SpecGraphError, ValueError):
    """Input series contains NaN/Inf or has an unusable shape."""


class ShapeError(SpecGraphError, ValueError):
    """Arrays passed together do not have compatible shapes."""


class DomainError(SpecGraphError, ValueError):
    """A scalar argument lies outside the mathematical domain of the call."""


class InvalidWindowError(SpecGraphError, ValueError):
    """Smoothing window length is not an odd integer >= 3."""


class InsufficientSamplesError(SpecGraphError, ValueError):
    """Series is too short to place even one smoothing window."""


class WindowOverflowError(SpecGraphError, ValueError):
    """Requested window count does not fit below the Nyquist bin."""


class InvalidPairError(SpecGraphError, ValueError):
    """An (i, j) index pair is out of range or lies on the diagonal."""


class NotPositiveDefiniteError(SpecGraphError, ValueError):
    """A matrix that must be Hermitian positive definite is not."""


class SweepExhaustedError(SpecGraphError, RuntimeError):
    """Penalty-level sweep hit its bound without reaching an empty graph."""


class SearchFailedError(SpecGraphError, RuntimeError):
    """Model-selection search could not produce a usable configuration."""


class GenerationFailedError(SpecGraphError, RuntimeError):
    """Random model generation kept failing the stability check."""


class IngestError(SpecGraphError, ValueError):
    """Input file is missing, malformed, or fails a data-validity check."""
