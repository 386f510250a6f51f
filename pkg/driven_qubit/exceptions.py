"""Custom driven_qubit exceptions.

Classes:
    DrivenQubitException: Base of every error raised by the package.
    InvalidParameterError: A physical or numerical input is out of its domain.
    NumericalFailure: Base for problems found while computing a result.
    IntegrationBudgetExceeded: The oracle integrator would need more steps than allowed.
    RootNotConverged: Bracket refinement exhausted its iterations.
    NoExtremumFound: A search window holds no maximum of the requested target.
    GridTooLarge: A sweep grid exceeds the configured cell cap.
    ExportError: Writing or reading a result file failed.
"""


class DrivenQubitException(ValueError):
    """Base exception of the driven_qubit package."""


class InvalidParameterError(DrivenQubitException):
    """A parameter violates its documented domain (non-finite, negative rate, bad ordering...)."""


class NumericalFailure(DrivenQubitException):
    """A numerical procedure could not deliver a result."""


class IntegrationBudgetExceeded(NumericalFailure):
    """The fixed-step integrator needs more steps than `max_steps`."""

    def __init__(self, required_steps, max_steps, *args):
        self.required_steps = required_steps
        self.max_steps = max_steps
        super().__init__(
            f"Integration needs {required_steps} steps but the budget is {max_steps}.",
            *args,
        )


class RootNotConverged(NumericalFailure):
    """Bisection of a bracket did not reach the requested tolerance."""

    def __init__(self, bracket, iterations, *args):
        self.bracket = bracket
        self.iterations = iterations
        super().__init__(
            f"Root in bracket [{bracket[0]!r}, {bracket[1]!r}] did not converge after {iterations} iterations.",
            *args,
        )


class NoExtremumFound(NumericalFailure):
    """No maximum of the target exists inside the search window."""


class GridTooLarge(NumericalFailure):
    """The requested grid has more cells than the configured cap."""


class ExportError(DrivenQubitException):
    """I/O failure while exporting or importing a sweep, carrying the offending path."""

    def __init__(self, path, reason, *args):
        self.path = path
        super().__init__(f"Could not access '{path}': {reason}", *args)
