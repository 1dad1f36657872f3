"""Plain-data verdicts produced by the identity and theorem checkers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one named check: a verdict plus per-item residuals."""

    name: str
    passed: bool
    max_residual: float
    residuals: tuple[float, ...] = ()
    notes: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "max_residual": self.max_residual,
            "residuals": list(self.residuals),
            "notes": self.notes,
        }


def combine(name: str, reports: list[CheckReport]) -> CheckReport:
    """Roll sub-reports into one verdict keeping the worst residual."""
    worst = max((r.max_residual for r in reports), default=0.0)
    return CheckReport(
        name=name,
        passed=all(r.passed for r in reports),
        max_residual=worst,
        residuals=tuple(r.max_residual for r in reports),
        notes="; ".join(r.notes for r in reports if r.notes),
    )
