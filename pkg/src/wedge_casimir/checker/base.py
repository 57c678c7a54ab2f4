"""Shared plumbing for verification suites."""

import logging
from typing import List

from ..models import CheckResult


logger = logging.getLogger(__name__)


class SuiteChecker:
    """
    Runs the assertions of one suite and records them as CheckResults.

    Subclasses implement ``_run`` and call ``_record`` once per assertion.
    """

    suite = ""

    def __init__(self):
        self._checks: List[CheckResult] = []

    def check_suite(self) -> List[CheckResult]:
        """Run every assertion of the suite."""
        self._checks = []
        logger.info("[CHECK] Running %s suite...", self.suite)

        self._run()

        failed = [c for c in self._checks if not c.passed]
        if failed:
            logger.warning("[WARN] %s: %d of %d checks failed", self.suite, len(failed), len(self._checks))
            for c in failed:
                logger.warning("  - %s: %.3e > %.3e", c.name, c.measured, c.bound)
        else:
            logger.info("[OK] %s: %d checks passed", self.suite, len(self._checks))
        return list(self._checks)

    def _run(self) -> None:
        raise NotImplementedError

    def _record(self, name: str, measured: float, bound: float) -> None:
        self._checks.append(CheckResult(
            suite=self.suite,
            name=name,
            passed=bool(measured <= bound),
            measured=float(measured),
            bound=float(bound),
        ))
