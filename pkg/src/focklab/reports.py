"""Uniform pass/fail report structure shared by the verification sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckReport:
    """Outcome of one verification sweep.

    A sweep passes exactly when its failure list is empty.  ``params``
    records the window/cutoff/seed the sweep ran with so reports are
    self-describing; ``duration_ms`` is filled by the suite runner and is
    the only field allowed to vary between reruns.
    """

    name: str
    params: dict
    checks: int
    failures: list = field(default_factory=list)
    duration_ms: float | None = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "params": self.params,
            "checks": self.checks,
            "passed": self.passed,
            "failures": self.failures,
        }
        if self.duration_ms is not None:
            out["duration_ms"] = self.duration_ms
        return out
