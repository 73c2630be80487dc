"""Exception types shared across the package.

Every error raised deliberately by this package derives from RecMahlerError,
so callers can catch the whole family without masking genuine bugs
(TypeError, AttributeError and friends stay untouched).
"""


class RecMahlerError(Exception):
    """Base class for all package-specific errors."""


class GradeMismatch(RecMahlerError):
    """Sum or difference of exact values with different nonzero pi grades."""


class DivisionByZero(RecMahlerError, ZeroDivisionError):
    """Division of an exact value by an exact zero."""


class PoleEvaluation(RecMahlerError):
    """Numeric evaluation of a rational function at a zero of its denominator."""


class RepeatedPole(RecMahlerError):
    """Partial fractions requested for a denominator with a repeated root."""


class NonIntegerPole(RecMahlerError):
    """Partial fractions requested for a denominator with a non-integer root."""


class ImproperFraction(RecMahlerError):
    """Partial fractions requested for numerator degree >= denominator degree."""


class OddExponent(RecMahlerError):
    """Laurent polynomial constructed with an odd exponent."""


class ZeroArgument(RecMahlerError):
    """Laurent evaluation at x = 0."""


class ZeroRoot(RecMahlerError):
    """A root vector containing zero, which cannot be inverted."""


class ZeroPolynomial(RecMahlerError):
    """Root finding on the identically-zero polynomial."""


class DegenerateLeadingCoefficient(RecMahlerError):
    """Root finding on a coefficient vector whose leading entry is zero."""


class NoConvergence(RecMahlerError):
    """An iterative routine failed to reach its tolerance in the step budget."""


class NodeOnZero(RecMahlerError):
    """Log-integral quadrature hit an exact zero of the integrand."""


class StepTooLarge(RecMahlerError):
    """Finite-difference step too coarse for the requested stencil."""


class IndexOutOfRange(RecMahlerError):
    """Index outside the meaningful range of a coefficient family."""


class DimensionTooLarge(RecMahlerError):
    """A deliberately small-scale oracle asked to run beyond its size cap."""


class KernelNotFound(RecMahlerError):
    """An exact linear system unexpectedly had no nonzero kernel vector."""
