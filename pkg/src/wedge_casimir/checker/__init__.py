"""Verification suites behind the ``verify`` command."""

from typing import Optional

from ..models import SuiteReport
from .base import SuiteChecker
from .specfun_checker import SpecfunChecker
from .quad_checker import QuadChecker
from .wedge_checker import WedgeChecker
from .green_checker import GreenChecker


SUITES = ("specfun", "quad", "wedge", "green")


def run_suites(suite: str = "all", tol: Optional[float] = None) -> SuiteReport:
    """Run one suite, or all of them in fixed order."""
    names = SUITES if suite == "all" else (suite,)
    checkers = {
        "specfun": SpecfunChecker,
        "quad": QuadChecker,
        "wedge": lambda: WedgeChecker(tol=tol),
        "green": GreenChecker,
    }
    report = SuiteReport()
    for name in names:
        if name not in checkers:
            raise ValueError(f"Unknown suite: {name}")
        report.checks.extend(checkers[name]().check_suite())
    return report


__all__ = [
    "SuiteChecker",
    "SpecfunChecker",
    "QuadChecker",
    "WedgeChecker",
    "GreenChecker",
    "SUITES",
    "run_suites",
]
