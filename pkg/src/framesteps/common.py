"""Shared result and error types."""

from __future__ import annotations

from dataclasses import dataclass, field


class PreconditionError(ValueError):
    """An input lies outside the domain of the requested operation."""


@dataclass(frozen=True)
class Violation:
    rule: str
    row: int
    col: int
    message: str = ""

    def __str__(self) -> str:
        where = f"({self.row},{self.col})" if self.row else "shape"
        return f"{self.rule} at {where}: {self.message}" if self.message else f"{self.rule} at {where}"


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a structural check; coordinates are 1-based (row, column)."""

    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def first(self, rule: str) -> Violation | None:
        return next((v for v in self.violations if v.rule == rule), None)
