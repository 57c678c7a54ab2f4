"""Data models for verification suites."""

from typing import List
from pydantic import BaseModel, Field


class CheckResult(BaseModel):
    """One assertion of a verification suite."""

    suite: str = Field(description="Suite: specfun, quad, wedge, green")
    name: str = Field(description="What was checked")
    passed: bool
    measured: float = Field(description="Worst observed deviation (or value)")
    bound: float = Field(description="Tolerance the measurement is held to")


class SuiteReport(BaseModel):
    """Aggregated outcome of one or more suites."""

    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def get_counts(self) -> dict:
        """Get counts of checks by outcome."""
        counts = {"passed": 0, "failed": 0}
        for c in self.checks:
            counts["passed" if c.passed else "failed"] += 1
        return counts
