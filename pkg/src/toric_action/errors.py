"""Exception types shared across the package."""


class ToricError(Exception):
    """Base class for every error raised deliberately by this package."""


class GradeMismatch(ToricError, TypeError):
    """Adding quantities that carry different powers of pi."""


class ConeViolation(ToricError, ValueError):
    """Parameters or class outside the Kahler cone."""


class DegeneratePolygon(ToricError, ValueError):
    """Moment polygon constraints are inconsistent or collapse an edge."""


class DegenerateMoments(ToricError, ArithmeticError):
    """Second-moment matrix is singular; cannot happen inside the cone."""


class Unsupported(ToricError, ValueError):
    """Request outside the range the implementation supports."""


class NonPositiveSquare(ToricError, ValueError):
    """A class with non-positive self-intersection or c1 pairing was given to T."""


class NotVerified(ToricError):
    """A positivity certificate failed; ``details`` names the offending terms."""

    def __init__(self, message, details=None):
        super().__init__(message)
        self.details = details or {}


class SameSign(ToricError, ValueError):
    """Bisection endpoints have the same exact sign."""


class DenominatorVanishes(ToricError, ZeroDivisionError):
    """A rational function's denominator is zero on the bracket."""


class ToleranceTooSmall(ToricError, RuntimeError):
    """Bisection hit its iteration cap before reaching the requested width."""


class BracketFailure(ToricError, RuntimeError):
    """No sign change where an interior critical point is expected."""
