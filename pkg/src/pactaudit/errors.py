"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: schema/configuration
problems exit 1, task failures exit 2.
"""

from __future__ import annotations


class SchemaError(ValueError):
    """An input file does not match the declared schema (e.g. missing column)."""


class ConfigError(ValueError):
    """A configuration value is invalid or inconsistent."""


class UsageError(ValueError):
    """An operation was called with arguments that violate its contract."""


class DegenerateTaskError(ValueError):
    """A classification task has an empty outcome class."""

    def __init__(self, class_label, message: str | None = None):
        self.class_label = class_label
        super().__init__(message or f"outcome class {class_label!r} has no rows")


class SeparationError(RuntimeError):
    """The likelihood diverges: one or more features separate the outcome."""

    def __init__(self, features: tuple[str, ...], bound: float):
        self.features = tuple(features)
        self.bound = bound
        super().__init__(
            f"coefficient magnitude exceeded {bound:g} for feature(s) "
            f"{', '.join(features) or '(intercept)'}; data appear separable"
        )


class RankDeficiencyError(RuntimeError):
    """The design or information matrix is singular."""

    def __init__(self, column: str, message: str | None = None):
        self.column = column
        super().__init__(message or f"column {column!r} is collinear with earlier columns")


class InsufficientVariationError(ValueError):
    """A feature does not vary enough to support the requested analysis."""


class LeverageError(RuntimeError):
    """A leverage value is numerically 1, so studentization is undefined."""

    def __init__(self, row: int):
        self.row = row
        super().__init__(f"leverage for row {row} is numerically 1")


class NotConvergedError(RuntimeError):
    """An operation requiring a converged fit received a non-converged one."""
