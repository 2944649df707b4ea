"""
Pass/fail bookkeeping for the verification routines.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check."""

    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"name": self.name, "passed": self.passed}
        if self.detail:
            data["detail"] = self.detail
        return data

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass
class CheckReport:
    """
    Ordered collection of check results.

    Example:
        >>> report = CheckReport("relations")
        >>> report.add("[E1,F1]", True)
        >>> report.passed
        True
    """

    title: str
    results: List[CheckResult] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.results.append(CheckResult(name, bool(passed), detail))

    def extend(self, other: "CheckReport", prefix: str = "") -> None:
        """Append another report's results, optionally prefixing their names."""
        for r in other.results:
            self.results.append(CheckResult(prefix + r.name, r.passed, r.detail))

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]

    @property
    def first_failure(self) -> Optional[CheckResult]:
        return next((r for r in self.results if not r.passed), None)

    def __len__(self) -> int:
        return len(self.results)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "title": self.title,
            "passed": self.passed,
            "results": [r.to_dict() for r in self.results],
        }

    def __str__(self) -> str:
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'} ({len(self.results)} checks)"]
        lines.extend(f"  {r}" for r in self.results)
        return "\n".join(lines)
