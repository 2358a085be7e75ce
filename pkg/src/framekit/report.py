"""Check reports shared by the model suite and the command line."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: Any = None

    def as_dict(self) -> dict:
        return {"name": self.name, "pass": self.passed, "witness": _jsonable(self.witness)}


@dataclass
class Report:
    command: str
    checks: list = field(default_factory=list)
    timing_ms: float = 0.0
    data: Any = None

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, witness: Any = None) -> Check:
        c = Check(name, bool(passed), witness)
        self.checks.append(c)
        return c

    def extend(self, checks) -> None:
        self.checks.extend(checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def as_dict(self) -> dict:
        out = {
            "command": self.command,
            "ok": self.ok,
            "checks": [c.as_dict() for c in self.checks],
            "timing_ms": round(self.timing_ms, 3),
        }
        if self.data is not None:
            out["data"] = _jsonable(self.data)
        return out


class timed:
    """Context manager that stores elapsed milliseconds on a report."""

    def __init__(self, report: Report):
        self.report = report

    def __enter__(self):
        self._t = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.timing_ms = (time.perf_counter() - self._t) * 1000
        return False


def _jsonable(x):
    if isinstance(x, (frozenset, set)):
        return sorted(_jsonable(v) for v in x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if hasattr(x, "as_dict"):
        return x.as_dict()
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    return str(x)
