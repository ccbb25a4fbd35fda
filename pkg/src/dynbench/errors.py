"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes: configuration problems -> 2,
numerical failures -> 3, I/O problems -> 4.
"""


class DynbenchError(Exception):
    """Base class for all package errors."""


class ConfigurationError(DynbenchError):
    """Invalid configuration: bad dimensions, unknown names, bad parameters."""


class ContractViolation(DynbenchError):
    """An internal API was called outside its contract (e.g. non-scalar backward root)."""


class NumericalError(DynbenchError):
    """Base for runtime numerical failures."""


class SingularDynamicsError(NumericalError):
    """A mass matrix / Hessian solve hit a singular or ill-conditioned system.

    Carries enough context (which operator, condition estimate, offending state)
    to diagnose the failure.
    """

    def __init__(self, message, state=None, cond=None):
        super().__init__(message)
        self.state = state
        self.cond = cond


class ConstraintDegeneracyError(NumericalError):
    """The constraint Jacobian lost rank (e.g. coplanar body points)."""


class DivergenceError(NumericalError):
    """A rollout produced non-finite state; ``step`` is the first bad step."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class TrainingDivergenceError(NumericalError):
    """Non-finite gradients during optimization; ``epoch`` locates the failure."""

    def __init__(self, message, epoch=None):
        super().__init__(message)
        self.epoch = epoch


class DataIOError(DynbenchError):
    """Dataset/checkpoint files missing, malformed, or inconsistent with the request."""
