"""Claim reports: structured, re-checkable verification outcomes."""
from __future__ import annotations

import json
import operator
from dataclasses import dataclass, field
from typing import Any, Union

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"

RELATIONS = {
    "==": operator.eq,
    "<": operator.lt,
    ">": operator.gt,
    "<=": operator.le,
    ">=": operator.ge,
}

Value = Union[int, str]


@dataclass(frozen=True)
class Claim:
    """One checked statement.  ``status`` is derived from ``lhs relation rhs``.

    A failed relation on a bound-limited search is reported as inconclusive
    rather than fail.
    """

    id: str
    citation: str
    lhs: Value
    rhs: Value
    relation: str = "=="
    detail: str = ""
    bound_limited: bool = False
    status: str = field(default="")

    def __post_init__(self):
        holds = RELATIONS[self.relation](self.lhs, self.rhs)
        derived = PASS if holds else (INCONCLUSIVE if self.bound_limited else FAIL)
        if self.status and self.status != derived:
            raise ValueError(f"claim {self.id}: status {self.status} but relation gives {derived}")
        object.__setattr__(self, "status", derived)

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "citation": self.citation,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation,
            "detail": self.detail,
        }


@dataclass
class ClaimReport:
    suite: str
    seed: Union[int, None] = None
    bound: Union[int, None] = None
    claims: list[Claim] = field(default_factory=list)

    def add(self, *args, **kwargs) -> Claim:
        c = Claim(*args, **kwargs)
        self.claims.append(c)
        return c

    def __getitem__(self, claim_id: str) -> Claim:
        for c in self.claims:
            if c.id == claim_id:
                return c
        raise KeyError(claim_id)

    @property
    def statuses(self) -> list[str]:
        return [c.status for c in self.claims]

    def counts(self) -> dict[str, int]:
        return {s: self.statuses.count(s) for s in (PASS, FAIL, INCONCLUSIVE)}

    def recheck(self) -> bool:
        """Re-derive every status from the stored lhs/rhs."""
        for c in self.claims:
            holds = RELATIONS[c.relation](c.lhs, c.rhs)
            if (c.status == PASS) != holds:
                return False
            if c.status == INCONCLUSIVE and not c.bound_limited:
                return False
        return True

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "bound": self.bound,
            "claims": [c.to_dict() for c in self.claims],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}  seed: {self.seed}  bound: {self.bound}"]
        width = max((len(c.id) for c in self.claims), default=0)
        for c in self.claims:
            line = f"[{c.status:^12}] {c.id:<{width}}  {c.lhs} {c.relation} {c.rhs}"
            if c.detail:
                line += f"  ({c.detail})"
            lines.append(line)
            lines.append(f"{'':15}{c.citation}")
        n = self.counts()
        lines.append(f"{n[PASS]} pass, {n[FAIL]} fail, {n[INCONCLUSIVE]} inconclusive")
        return "\n".join(lines) + "\n"


def exit_code(statuses) -> int:
    """0 all pass, 1 any fail, 3 inconclusive without failures."""
    statuses = list(statuses)
    if FAIL in statuses:
        return 1
    if INCONCLUSIVE in statuses:
        return 3
    return 0
