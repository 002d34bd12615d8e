"""Check reports and their JSON form."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from typing import Any

MAX_LISTED = 50
SCHEMA_VERSION = 1


@dataclass
class Report:
    check: str
    bound: Any
    violations: list = field(default_factory=list)
    violation_count: int = 0
    findings: list = field(default_factory=list)
    checked: int = 0
    notes: list = field(default_factory=list)
    errors: list = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.violation_count == 0 and not self.errors

    def violation(self, item: dict) -> None:
        self.violation_count += 1
        if len(self.violations) < MAX_LISTED:
            self.violations.append(item)

    def to_json(self) -> dict:
        out = asdict(self)
        out["passed"] = self.passed
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Report":
        data = dict(data)
        data.pop("passed", None)
        return cls(**data)


@dataclass
class SuiteReport:
    suite: str
    parameters: dict
    checks: list = field(default_factory=list)
    elapsed_ms: float = 0.0
    schema_version: int = SCHEMA_VERSION

    @property
    def fail_count(self) -> int:
        return sum(1 for c in self.checks if not c.passed)

    @property
    def pass_count(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def finding_count(self) -> int:
        return sum(len(c.findings) for c in self.checks)

    def exit_code(self, strict: bool = False) -> int:
        if self.fail_count:
            return 1
        if strict and self.finding_count:
            return 1
        return 0

    def to_json(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "suite": self.suite,
            "parameters": self.parameters,
            "pass": self.pass_count,
            "fail": self.fail_count,
            "findings": self.finding_count,
            "checks": [c.to_json() for c in self.checks],
            "elapsed_ms": self.elapsed_ms,
        }

    @classmethod
    def from_json(cls, data: dict) -> "SuiteReport":
        return cls(
            suite=data["suite"],
            parameters=data["parameters"],
            checks=[Report.from_json(c) for c in data["checks"]],
            elapsed_ms=data["elapsed_ms"],
            schema_version=data.get("schema_version", SCHEMA_VERSION),
        )


def dumps(obj) -> str:
    if hasattr(obj, "to_json"):
        obj = obj.to_json()
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


@contextmanager
def timed(report):
    start = time.perf_counter()
    try:
        yield report
    finally:
        report.elapsed_ms = round((time.perf_counter() - start) * 1000.0, 3)
