"""Check records and suite reports with a stable JSON form."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any, Callable

from . import __version__

PASS, FAIL, DISCREPANCY = "pass", "fail", "discrepancy"


def _plain(x: Any) -> Any:
    """JSON-friendly copy: tuples to lists, Fractions and other scalars to str."""
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [_plain(v) for v in x]
        return sorted(items, key=repr) if isinstance(x, (set, frozenset)) else items
    return str(x)


@dataclass
class Check:
    id: str
    anchor: str
    status: str
    expected: Any = None
    actual: Any = None
    witness: Any = None

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "status": self.status,
            "expected": _plain(self.expected),
            "actual": _plain(self.actual),
            "witness": _plain(self.witness),
        }


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def failing(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def as_dict(self, timings: bool = True) -> dict:
        d = {
            "suite": self.suite,
            "version": __version__,
            "status": PASS if self.ok else FAIL,
            "checks": [c.as_dict() for c in self.checks],
        }
        if timings:
            d["elapsed_ms"] = self.elapsed_ms
        return d

    def to_json(self, timings: bool = True) -> str:
        return json.dumps(self.as_dict(timings), indent=2, sort_keys=False) + "\n"


class Recorder:
    """Collects checks for one suite; a raising check is recorded as a failure."""

    def __init__(self, suite: str):
        self.report = Report(suite)
        self._t0 = time.perf_counter()

    def eq(self, cid: str, anchor: str, expected: Any, actual_fn: Callable[[], Any], witness: Any = None) -> Any:
        try:
            actual = actual_fn()
        except Exception as e:  # noqa: BLE001 - a crash is a failed check
            self.report.checks.append(Check(cid, anchor, FAIL, expected, None, f"{type(e).__name__}: {e}"))
            return None
        status = PASS if actual == expected else FAIL
        self.report.checks.append(Check(cid, anchor, status, expected, actual, witness))
        return actual

    def true(self, cid: str, anchor: str, fn: Callable[[], Any], witness_fn: Callable[[Any], Any] | None = None) -> Any:
        """fn returns (ok, witness) or a bool."""
        try:
            out = fn()
        except Exception as e:  # noqa: BLE001
            self.report.checks.append(Check(cid, anchor, FAIL, True, False, f"{type(e).__name__}: {e}"))
            return None
        ok, wit = out if isinstance(out, tuple) else (out, None)
        self.report.checks.append(Check(cid, anchor, PASS if ok else FAIL, True, bool(ok), wit))
        return ok

    def note(self, cid: str, anchor: str, expected: Any, actual: Any, witness: Any) -> None:
        """A documented disagreement with printed source data; does not fail the suite."""
        status = PASS if expected == actual else DISCREPANCY
        self.report.checks.append(Check(cid, anchor, status, expected, actual, witness))

    def done(self) -> Report:
        self.report.elapsed_ms = int((time.perf_counter() - self._t0) * 1000)
        return self.report
