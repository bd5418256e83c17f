"""Run reports: a list of named checks plus verdict payloads, as text or JSON."""

from __future__ import annotations

import json
import shlex
import time
from dataclasses import dataclass, field

SCHEMA = "cesa-report/1"

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_INCONCLUSIVE = 3


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    data: dict | list | None = None

    def to_json(self) -> dict:
        d = {"name": self.name, "passed": self.passed, "detail": self.detail}
        if self.data is not None:
            d["data"] = self.data
        return d


@dataclass
class RunReport:
    command: list[str]
    carrier: str
    checks: list[Check] = field(default_factory=list)
    verdict: dict | None = None
    bounds: dict = field(default_factory=dict)
    seed: int | None = None
    inconclusive: bool = False
    notes: list[str] = field(default_factory=list)
    summary: str = ""
    proof: list[str] = field(default_factory=list)
    _start: float = field(default_factory=time.perf_counter, repr=False)

    def check(self, name: str, passed: bool, detail: str = "", data=None) -> bool:
        self.checks.append(Check(name, bool(passed), detail, data))
        return bool(passed)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def exit_code(self) -> int:
        if not self.passed:
            return EXIT_FAIL
        return EXIT_INCONCLUSIVE if self.inconclusive else EXIT_PASS

    def to_json(self, timing: bool = True) -> dict:
        d = {
            "schema": SCHEMA,
            "command": self.command,
            "carrier": self.carrier,
            "passed": self.passed,
            "inconclusive": self.inconclusive,
            "checks": [c.to_json() for c in self.checks],
            "summary": self.summary,
            "verdict": self.verdict,
            "proof": self.proof,
            "bounds": self.bounds,
            "seed": self.seed,
            "notes": self.notes,
        }
        if timing:
            d["timing_s"] = round(time.perf_counter() - self._start, 3)
        return d

    def dumps(self, timing: bool = True) -> str:
        return json.dumps(self.to_json(timing), indent=2, ensure_ascii=False, sort_keys=False) + "\n"

    def render(self) -> str:
        lines = [f"$ {shlex.join(self.command)}", f"carrier: {self.carrier}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            lines.append(f"  [{mark}] {c.name}" + (f": {c.detail}" if c.detail else ""))
        if self.summary:
            lines.append(f"verdict: {self.summary}")
        lines.extend(f"  {p}" for p in self.proof)
        for n in self.notes:
            lines.append(f"note: {n}")
        if not self.passed:
            lines.append(f"first failing check: {self.first_failure.name}")
        elif self.inconclusive:
            lines.append("result: inconclusive at bound")
        return "\n".join(lines) + "\n"
