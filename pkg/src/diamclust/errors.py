"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """A domain precondition failed (CLI exit code 3)."""


class NotPositiveDefinite(PreconditionError):
    """Factorization hit a pivot at or below the numeric floor."""


class EigenvalueConditionFailed(PreconditionError):
    """The smallest adjacency eigenvalue is too close to (or below) -2."""


class NotThreeRegular(PreconditionError):
    """The operation requires a 3-regular input graph."""


class ConditionViolated(PreconditionError):
    """A caller-supplied geometric representation breaks the required separation."""

    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


class OracleCapExceeded(PreconditionError):
    """Instance too large for the exponential exact oracle."""


class ConvergenceError(RuntimeError):
    """Iterative eigenvalue computation did not converge within its sweep cap."""


class DistortionNotAchieved(RuntimeError):
    """Random projection failed its distortion bound on every retry."""

    def __init__(
        self,
        message: str,
        worst_pair: tuple[int, int] | None = None,
        worst_distortion: float | None = None,
    ):
        super().__init__(message)
        self.worst_pair = worst_pair
        self.worst_distortion = worst_distortion


class GuaranteeViolation(RuntimeError):
    """A solver result failed independent re-verification (CLI exit code 2)."""
