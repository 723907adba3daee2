"""Error hierarchy shared by every anyon1d module.

``InvalidInput`` subclasses mean the caller asked for something outside an
operation's domain (CLI exit code 2); ``NumericFailure`` subclasses mean a
numerical procedure missed its contract (CLI exit code 3).
"""


class Anyon1DError(Exception):
    """Base class for all library errors."""


class InvalidInput(Anyon1DError, ValueError):
    exit_code = 2


class NumericFailure(Anyon1DError, ArithmeticError):
    exit_code = 3


class DomainError(InvalidInput):
    """Argument outside the mathematical domain (z = 0, x <= 0, ...)."""


class KindMismatch(InvalidInput):
    """Statistics kind incompatible with the requested transformation."""


class NoBoundState(InvalidInput):
    """Free-space bound state requested for a_sc <= 0 or a_sc = inf."""


class BreakdownRegime(InvalidInput):
    """a_sc too close to 0+ for the zero-range treatment."""


class ZeroScatteringLength(InvalidInput):
    """Quantity divergent at a_sc = 0."""


class BranchOutOfRange(InvalidInput):
    """Spectrum branch index negative or beyond the supported range."""


class ComplexParent(InvalidInput):
    """Boson/fermion parent state is not real-valued."""


class ConfigError(InvalidInput):
    """Invalid run configuration or environment."""


class PoleError(NumericFailure):
    """Gamma function evaluated at a non-positive integer."""


class NoSignChange(NumericFailure):
    """Root bracket without a sign change."""


class ExtrapolationFailure(NumericFailure):
    """One-sided limit ladder did not converge."""


class IllConditioned(NumericFailure):
    """Least-squares design matrix too ill-conditioned."""


class WindowTooSmall(NumericFailure):
    """Wavefunction not negligible at the edge of the integration window."""


class QuadratureFailure(NumericFailure):
    """Quadrature did not converge under point doubling."""


class NonNormalizedWarning(UserWarning):
    """State normalization deviates from 1 beyond tolerance."""
