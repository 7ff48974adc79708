from __future__ import annotations

from typing import TYPE_CHECKING, Sequence

if TYPE_CHECKING:
    from .numerics.quadrature import QuadratureResult

__all__ = [
    "PlankcertError",
    "ConfigError",
    "DomainRangeError",
    "PreconditionError",
    "UnsupportedInputError",
    "IntegrationError",
    "BudgetExhaustedError",
    "SceneValidationError",
]


class PlankcertError(Exception):
    """
    Base class of every error raised deliberately by the package.
    """


class ConfigError(PlankcertError, ValueError):
    def __init__(self, r: float, R: float):
        self.r = r
        self.R = R
        message = f"Invariant 0 < r < R violated by annulus config: {r=}, {R=}"
        super().__init__(message)


class DomainRangeError(PlankcertError, ValueError):
    def __init__(self, name: str, value: float, domain: str):
        self.name = name
        self.value = value
        message = f"{name}={value!r} is outside the domain {domain}"
        super().__init__(message)


class PreconditionError(PlankcertError, ValueError):
    """
    An operation was called on input that its precondition excludes.
    """


class UnsupportedInputError(PlankcertError, ValueError):
    """
    The input is admissible in principle but the construction cannot handle it (e.g.
    a vertex strictly inside the inner circle has no tangent halflines).
    """


class IntegrationError(PlankcertError, ArithmeticError):
    def __init__(self, location: float, value: float, message: str | None = None):
        self.location = location
        self.value = value
        if message is None:
            message = f"Non-finite integrand sample {value!r} at x={location!r}"
        super().__init__(message)


class BudgetExhaustedError(IntegrationError):
    def __init__(self, partial: QuadratureResult, max_evaluations: int):
        self.partial = partial
        self.max_evaluations = max_evaluations
        message = (
            f"Evaluation cap {max_evaluations} reached with partial value "
            f"{partial.value!r} (error estimate {partial.error_estimate:.3g})"
        )
        super().__init__(location=float("nan"), value=partial.value, message=message)


class SceneValidationError(PlankcertError, ValueError):
    def __init__(self, problems: Sequence[tuple[str, str]], source: str = "scene"):
        self.problems = list(problems)
        self.source = source
        lines = [f"{path or '<root>'}: {msg}" for path, msg in self.problems]
        message = f"Invalid {source}:\n  " + "\n  ".join(lines)
        super().__init__(message)
