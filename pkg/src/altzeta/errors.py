"""Exception types shared by every evaluator."""


class AltZetaError(Exception):
    """Base class for all library errors."""


class DomainError(AltZetaError, ValueError):
    """Argument outside the mathematical domain of the operation."""


class RegionError(DomainError):
    """Argument outside the validity region of the selected method."""


class InvalidConfig(AltZetaError, ValueError):
    """Malformed acceleration/tolerance configuration."""


class InvalidInterval(AltZetaError, ValueError):
    """Integration interval with a >= b."""


class NonConvergence(AltZetaError, RuntimeError):
    """Requested tolerance not reached within the term budget.

    Carries the best estimate produced so far in ``result`` so callers can
    decide whether the partial answer is still usable.
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result
