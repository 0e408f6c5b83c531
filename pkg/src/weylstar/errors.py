"""Exception hierarchy.

Input failures derive from :class:`WeylStarError` and are what the CLI maps to
exit code 1.  States that valid inputs can never reach derive from
:class:`AssertionError` instead: reaching one means an arithmetic bug, not a
bad input, and nothing should catch them.
"""


class WeylStarError(Exception):
    """Base class for domain errors raised on invalid input."""


class ZeroElement(WeylStarError, ValueError):
    """A support/degree operation was applied to the zero element."""


class ZeroPoint(WeylStarError, ValueError):
    """Alignment was asked for the origin."""


class InvalidDirection(WeylStarError, ValueError):
    pass


class InvalidParams(WeylStarError, ValueError):
    """Family parameters with a**2 - b**2 != 1."""


class BoundExceeded(WeylStarError, ValueError):
    pass


class ResidualError(WeylStarError):
    """Failure of an exact identity; ``residual`` holds what should be zero."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class NotEndomorphism(ResidualError):
    pass


class NotAlphaEquivariant(ResidualError):
    pass


class HypothesisViolation(ResidualError):
    """A symmetric pair fails beta-parity or ``[p0, p1] == 1/2``."""


class NotAlphaMorphism(ResidualError):
    pass


class JacobianNotOne(ResidualError):
    pass


class NotInCanonicalShape(AssertionError):
    """A validated symmetric pair is not of the form every alpha-endomorphism has."""


class NotInFamily(AssertionError):
    """A validated Jacobian pair did not match the canonical family."""
