"""Run reports: per-check verdicts, seeds and timings, serialisable to JSON."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field

PASS, FAIL, LIMIT = "pass", "fail", "limit"


@dataclass
class Check:
    name: str
    status: str
    kind: str = "exact"  # or "probabilistic"
    details: dict = field(default_factory=dict)
    seed: int | None = None
    trials: int | None = None

    def to_json(self):
        out = {"name": self.name, "status": self.status, "kind": self.kind, "details": self.details}
        if self.kind == "probabilistic":
            out["seed"] = self.seed
            out["trials"] = self.trials
        return out


@dataclass
class RunReport:
    command: str
    inputs: dict
    seed: int
    field: str
    checks: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)
    artifacts: list = field(default_factory=list)
    results: dict = field(default_factory=dict)

    def add(self, name, passed, kind="exact", details=None, seed=None, trials=None):
        status = PASS if passed else FAIL
        self.checks.append(Check(name, status, kind, details or {}, seed, trials))
        return passed

    def add_limit(self, name, message):
        self.checks.append(Check(name, LIMIT, "exact", {"message": message}))

    @contextmanager
    def timed(self, label):
        start = time.perf_counter()
        try:
            yield
        finally:
            self.timings[label] = round(time.perf_counter() - start, 6)

    def exit_code(self):
        statuses = {c.status for c in self.checks}
        if FAIL in statuses:
            return 1
        if LIMIT in statuses:
            return 2
        return 0

    def to_json(self):
        return {
            "command": self.command,
            "inputs": self.inputs,
            "seed": self.seed,
            "field": self.field,
            "results": self.results,
            "checks": [c.to_json() for c in self.checks],
            "timings": self.timings,
            "artifacts": self.artifacts,
            "verdict": {0: PASS, 1: FAIL, 2: LIMIT}[self.exit_code()],
        }
