"""Verdict records shared by the decision procedures and the command line."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Dict, List

from .complex import NotPerfect, NotPerfectWithinCutoff, Perfect
from .module import ExceedsCutoff

PASS, FAIL, UNRESOLVED, SKIPPED = "pass", "fail", "unresolved", "skipped"


@dataclass
class Check:
    name: str
    status: str
    detail: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        out = {"name": self.name, "status": self.status}
        out.update({k: jsonable(v) for k, v in self.detail.items()})
        return out


@dataclass
class Report:
    kind: str
    verdict: str
    checks: List[Check] = field(default_factory=list)
    data: Dict[str, Any] = field(default_factory=dict)

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"kind": self.kind, "verdict": self.verdict}
        out.update({k: jsonable(v) for k, v in self.data.items()})
        out["checks"] = [c.to_dict() for c in self.checks]
        return out


def combine(statuses, ok: str = "certified", bad: str = "refuted", open_: str = "unresolved") -> str:
    statuses = list(statuses)
    if FAIL in statuses:
        return bad
    if UNRESOLVED in statuses:
        return open_
    return ok


def perfect_status(v) -> str:
    if isinstance(v, Perfect):
        return PASS
    if isinstance(v, NotPerfect):
        return FAIL
    return UNRESOLVED


def dimension_status(v) -> str:
    """Finite dimension -> pass, certified infinite -> fail, cutoff -> unresolved."""
    if isinstance(v, ExceedsCutoff):
        return UNRESOLVED
    if v == math.inf:
        return FAIL
    return PASS


def jsonable(v):
    if isinstance(v, Perfect):
        return {"verdict": "perfect", "bound": jsonable(v.bound)}
    if isinstance(v, NotPerfect):
        return {"verdict": "not_perfect", "first": v.first, "repeat": v.repeat}
    if isinstance(v, NotPerfectWithinCutoff):
        return {"verdict": "not_perfect_within_cutoff", "cutoff": v.cutoff}
    if isinstance(v, ExceedsCutoff):
        return {"exceeds_cutoff": v.cutoff}
    if isinstance(v, float):
        if v == math.inf:
            return "inf"
        if v == -math.inf:
            return "-inf"
        return v
    if isinstance(v, (list, tuple)):
        return [jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): jsonable(x) for k, x in v.items()}
    if hasattr(v, "item") and not isinstance(v, (str, bytes)):
        return v.item()
    return v
