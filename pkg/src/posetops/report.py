"""Uniform result object for the verification suites."""

from __future__ import annotations

import time
from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    suite: str
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, passed: bool, **context) -> None:
        self.cases += 1
        if not passed:
            self.failures.append(context)

    def summary(self) -> str:
        state = "ok" if self.ok else f"FAILED ({len(self.failures)} failures)"
        return f"{self.suite}: {state}, {self.cases} cases, {self.seconds:.2f}s"

    def to_doc(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": self.failures,
            "seconds": round(self.seconds, 3),
            "ok": self.ok,
        }


class timed:
    """Context manager stamping elapsed wall time onto a report."""

    def __init__(self, report: VerificationReport):
        self.report = report

    def __enter__(self) -> VerificationReport:
        self._t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.seconds = time.perf_counter() - self._t0
        return False
