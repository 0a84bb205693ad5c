from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


class Unresolved(Exception):
    """A bounded search found nothing.  This is never a proof of absence."""


@dataclass
class Check:
    name: str
    ok: bool
    detail: dict = field(default_factory=dict)


@dataclass
class Report:
    """Ordered list of named pass/fail checks; passes iff every check passes."""

    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, ok: bool, **detail) -> bool:
        self.checks.append(Check(name, bool(ok), detail))
        return bool(ok)

    def extend(self, other: Report, prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.ok, c.detail))

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": [{"name": c.name, "ok": c.ok, "detail": jsonable(c.detail)} for c in self.checks],
        }

    def __str__(self) -> str:
        lines = [f"{self.title}: {'PASS' if self.ok else 'FAIL'}"]
        for c in self.checks:
            extra = f"  {jsonable(c.detail)}" if c.detail and not c.ok else ""
            lines.append(f"  [{'ok' if c.ok else 'FAIL'}] {c.name}{extra}")
        return "\n".join(lines)


def jsonable(obj: Any) -> Any:
    """Convert to JSON-safe values; rationals become ``"p/q"`` strings."""
    from .semigroups import DiffPair

    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, DiffPair):
        return {"plus": jsonable(obj.plus), "minus": jsonable(obj.minus)}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, frozenset, set)):
        items = sorted(obj, key=repr) if isinstance(obj, (frozenset, set)) else obj
        return [jsonable(x) for x in items]
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return int(obj)
    if hasattr(obj, "describe"):
        return obj.describe()
    return repr(obj)
