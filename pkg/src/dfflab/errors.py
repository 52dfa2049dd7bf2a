"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Input violates a documented precondition or data invariant."""


class SupportMismatchError(ValidationError):
    """Two distributions were combined but their label lists differ."""


class ConfigurationError(ValueError):
    """A parameter combination or config document is semantically invalid."""


class ConfigSyntaxError(ConfigurationError):
    """A config document is malformed; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class NumericFailureError(RuntimeError):
    """A numerical routine failed structurally (singular Jacobian, LAPACK error)."""


class NonConvergenceError(NumericFailureError):
    """An iteration hit its step cap; carries the last residual seen."""

    def __init__(self, message: str, residual: float, iterations: int):
        super().__init__(f"{message} (residual {residual:.3e} after {iterations} iterations)")
        self.residual = residual
        self.iterations = iterations


class PartialResultError(RuntimeError):
    """A parameter sweep died mid-way; carries everything that did converge."""

    def __init__(self, message: str, converged: list, failed_at: float):
        super().__init__(f"{message} (failed at parameter {failed_at!r})")
        self.converged = converged
        self.failed_at = failed_at


class PrecisionLimitError(ValueError):
    """The requested tolerance needs an integration window beyond the configured cap."""
