"""Exception taxonomy: user errors vs internal defects."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class ConvergenceError(RuntimeError):
    """An iteration failed to meet its accuracy target.

    This signals a defect in the solver (bad seed region, tolerance below
    the floating-point noise floor), not a misuse by the caller.
    """


class StateError(RuntimeError):
    """An operation was invoked in a regime where it is not meaningful."""
