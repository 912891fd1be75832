"""Structured verification reports and their JSON encoding.

Every number is stored as a decimal string (rationals as ``"a/b"``) so big
integers survive any JSON reader. Encoding happens when a case is built,
which makes ``from_dict(to_dict())`` an exact round trip.
"""
from __future__ import annotations

import json
import platform
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import __version__

SCHEMA_VERSION = 1
PROVENANCE_TAGS = ("PAPER", "TRIVIAL", "DERIVED")


def encode_value(value: Any) -> Any:
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, dict):
        return {str(k): encode_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode_value(v) for v in value]
    raise TypeError(f"cannot encode {type(value).__name__} in a report")


@dataclass
class Case:
    name: str
    parameters: dict
    expected: Any
    provenance: str
    computed: Any
    passed: bool
    elapsed_ms: Any = None
    note: str | None = None

    def __post_init__(self):
        if self.provenance not in PROVENANCE_TAGS:
            raise ValueError(f"unknown provenance tag {self.provenance!r}")
        self.parameters = encode_value(self.parameters)
        self.expected = encode_value(self.expected)
        self.computed = encode_value(self.computed)
        self.passed = bool(self.passed)
        if self.elapsed_ms is not None:
            self.elapsed_ms = encode_value(self.elapsed_ms)

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "parameters": self.parameters,
            "expected": {"value": self.expected, "provenance": self.provenance},
            "computed": self.computed,
            "passed": self.passed,
        }
        if self.elapsed_ms is not None:
            out["elapsed_ms"] = self.elapsed_ms
        if self.note is not None:
            out["note"] = self.note
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "Case":
        return cls(
            name=data["name"],
            parameters=data["parameters"],
            expected=data["expected"]["value"],
            provenance=data["expected"]["provenance"],
            computed=data["computed"],
            passed=data["passed"],
            elapsed_ms=data.get("elapsed_ms"),
            note=data.get("note"),
        )


def toolchain_stamp() -> dict:
    return {
        "package": "localmodels",
        "version": __version__,
        "python": ".".join(platform.python_version_tuple()[:2]),
    }


@dataclass
class VerificationReport:
    campaign: str
    cases: list = field(default_factory=list)
    budgets: dict = field(default_factory=dict)
    toolchain: dict = field(default_factory=toolchain_stamp)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def add(self, case: Case) -> Case:
        self.cases.append(case)
        return case

    def failures(self) -> list:
        return [c for c in self.cases if not c.passed]

    def sorted(self) -> "VerificationReport":
        return VerificationReport(self.campaign, sorted(self.cases, key=lambda c: c.name),
                                  dict(self.budgets), dict(self.toolchain))

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "campaign": self.campaign,
            "passed": self.passed,
            "toolchain": self.toolchain,
            "budgets": encode_value(self.budgets),
            "cases": [c.to_dict() for c in self.cases],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        if data.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        report = cls(
            campaign=data["campaign"],
            cases=[Case.from_dict(c) for c in data["cases"]],
            budgets=data["budgets"],
            toolchain=data["toolchain"],
        )
        if report.passed != data["passed"]:
            raise ValueError("overall status disagrees with the cases")
        return report

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))

    def summary_lines(self) -> list[str]:
        lines = []
        for c in self.cases:
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"{status}  {c.name}  expected={_short(c.expected)} computed={_short(c.computed)}")
        lines.append(f"{sum(c.passed for c in self.cases)}/{len(self.cases)} cases passed")
        return lines


def _short(value) -> str:
    text = json.dumps(value, sort_keys=True)
    return text if len(text) <= 60 else text[:57] + "..."
