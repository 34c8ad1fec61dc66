"""Shared report containers for the symbolic verification suites."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping


@dataclass(frozen=True)
class Check:
    family: str
    label: str
    residual: str
    passed: bool
    extra: Mapping[str, object] | None = None

    def to_dict(self) -> dict:
        out = {
            "family": self.family,
            "label": self.label,
            "residual": self.residual,
            "passed": self.passed,
        }
        if self.extra:
            out.update(self.extra)
        return out


@dataclass(frozen=True)
class IdentityReport:
    name: str
    checks: tuple[Check, ...]
    schema: str = "identity-report/v1"

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple[Check, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def count(self, family: str | None = None) -> int:
        if family is None:
            return len(self.checks)
        return sum(1 for c in self.checks if c.family == family)

    def to_dict(self) -> dict:
        return {
            "schema": self.schema,
            "name": self.name,
            "all_passed": self.all_passed,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_text(self, verbose: bool = False) -> str:
        lines = []
        if verbose:
            for c in self.checks:
                status = "pass" if c.passed else "FAIL"
                lines.append(f"  {status}  [{c.family}] {c.label}  residual: {c.residual}")
        verdict = "all pass" if self.all_passed else f"{len(self.failures())} FAILED"
        lines.append(f"{self.name:28s} {len(self.checks):4d} checks   {verdict}")
        return "\n".join(lines)

    def to_csv_rows(self) -> list[list[str]]:
        return [
            [self.name, c.family, c.label, "pass" if c.passed else "fail", c.residual]
            for c in self.checks
        ]


@dataclass(frozen=True)
class ClosureReport(IdentityReport):
    """Identity report whose checks carry structure-constant expansions."""

    schema: str = "closure-report/v1"
