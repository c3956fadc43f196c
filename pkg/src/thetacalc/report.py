"""Structured pass/fail reports shared by the criteria and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple, Union

PASS = "pass"
FAIL = "fail"

Derived = Union[int, Fraction, str, list]


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS


@dataclass
class CriterionReport:
    """Ordered checks plus derived quantities.

    ``verdict`` is computed, so it can never disagree with the checks.
    Notes are informational and never affect the verdict.
    """

    title: str
    checks: List[Check] = field(default_factory=list)
    derived: Dict[str, Derived] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return PASS if all(c.passed for c in self.checks) else FAIL

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def check(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, PASS if ok else FAIL, detail))
        return ok

    def note(self, text: str) -> None:
        self.notes.append(text)

    def failed(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def extend(self, other: "CriterionReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.status, c.detail))
        for k, v in other.derived.items():
            self.derived[prefix + k] = v
        self.notes.extend(other.notes)

    def to_json(self) -> dict:
        return {
            "title": self.title,
            "verdict": self.verdict,
            "checks": [
                {"name": c.name, "status": c.status, "detail": c.detail}
                for c in self.checks
            ],
            "derived": {k: _jsonable(v) for k, v in self.derived.items()},
            "notes": list(self.notes),
        }

    def to_text(self) -> str:
        lines = [f"{self.title}: {self.verdict.upper()}"]
        for c in self.checks:
            line = f"  [{c.status.upper()}] {c.name}"
            if c.detail:
                line += f": {c.detail}"
            lines.append(line)
        for k, v in self.derived.items():
            lines.append(f"  {k} = {_text(v)}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines)


def _jsonable(v):
    if isinstance(v, bool):
        return v
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _text(v):
    if isinstance(v, (list, tuple)):
        return "(" + ", ".join(_text(x) for x in v) + ")"
    return str(v)
