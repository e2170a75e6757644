"""Result and configuration records used across the library."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class EvalResult:
    """Value of an evaluator together with an absolute-error estimate.

    ``err_est`` is an estimate, not a certified bound.  ``method`` names the
    evaluator that produced the value; ``terms_used`` counts series terms or
    integrand evaluations, whichever the method consumes.
    """

    value: float | complex
    err_est: float
    method: str
    terms_used: int = 0

    def __post_init__(self):
        if self.err_est < 0:
            raise ValueError("err_est must be nonnegative")
        if self.terms_used < 0:
            raise ValueError("terms_used must be nonnegative")

    @property
    def real(self) -> float:
        return self.value.real if isinstance(self.value, complex) else self.value


# Default absolute tolerance for binary64 evaluators.
DEFAULT_TOL = 1e-13
# Default absolute tolerance for the ExtReal (double-double) oracle paths.
ORACLE_TOL = 1e-25

SCHEMES = ("direct", "euler_transform", "cvz")


@dataclass(frozen=True)
class AccelConfig:
    """Summation scheme selection for alternating series."""

    scheme: str = "cvz"
    max_terms: int = 4000
    target_abs_tol: float = DEFAULT_TOL
    skip: int = field(default=0, repr=False)

    def __post_init__(self):
        from .errors import InvalidConfig

        if self.scheme not in SCHEMES:
            raise InvalidConfig(f"unknown scheme {self.scheme!r}")
        if self.max_terms < 1:
            raise InvalidConfig("max_terms must be >= 1")
        if not self.target_abs_tol > 0:
            raise InvalidConfig("target_abs_tol must be positive")
        if self.skip < 0:
            raise InvalidConfig("skip must be >= 0")
