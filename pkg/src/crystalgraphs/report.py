"""Machine-checkable pass/fail records for relation and axiom suites."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    passed: bool
    cases: int = 0
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}"
        if self.cases:
            text += f" ({self.cases} cases)"
        if not self.passed and self.detail:
            text += f": {self.detail}"
        return text


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, cases: int = 0, detail: str = "") -> Check:
        check = Check(name, bool(passed), cases, detail)
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]

    def __str__(self) -> str:
        return "\n".join(self.lines())

    def to_json(self) -> str:
        return json.dumps(
            {
                "passed": self.passed,
                "checks": [
                    {
                        "name": c.name,
                        "passed": c.passed,
                        "cases": c.cases,
                        "detail": c.detail,
                    }
                    for c in self.checks
                ],
            }
        )
