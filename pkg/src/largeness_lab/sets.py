"""Subsets of an ambient: exact eventually periodic sets, bounded windows,
and the derived sets (translate unions, intersections) the searches need.

Set DSL::

    periodic:offset=0,pattern=10          2N (one-sided, starts at offset)
    periodic:pattern=10,two_sided=1       2Z
    periodic:pattern=1,add=-3|-1,remove=4 exceptions, '|'-separated
    window:lo=0,hi=16,bits=5555           bit i of the hex number <=> lo+i
    evens                                 2N
    cofinite:from=10                      {n >= 10}
    all                                   the whole ambient
    finite:1|3|(2,1)                      explicit finite set
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .semigroups import Ambient, Element


class SetParseError(ValueError):
    pass


class LargeSet:
    """Base class: a subset of some ambient with decidable membership."""

    def contains(self, e: Element) -> bool:
        raise NotImplementedError

    def __contains__(self, e: Element) -> bool:
        return self.contains(e)

    def mask(self, lo: int, hi: int) -> np.ndarray:
        """Membership of ``lo, ..., hi - 1`` as a boolean array (dimension 1)."""
        return np.fromiter((self.contains(n) for n in range(lo, hi)), dtype=bool, count=max(hi - lo, 0))

    def describe(self) -> str:
        return repr(self)


def _bits(pattern: str) -> str:
    if not pattern or set(pattern) - {"0", "1"}:
        raise SetParseError(f"pattern must be a nonempty 0/1 string, got {pattern!r}")
    return pattern


@dataclass(frozen=True)
class EventuallyPeriodic(LargeSet):
    """``{n >= offset : pattern[(n - offset) % period] == '1'}`` plus exceptions.

    With ``two_sided`` the pattern extends to all of ``Z`` (no floor).
    Exceptions are finite: ``added`` members and ``removed`` non-members.
    """

    pattern: str
    offset: int = 0
    added: frozenset = frozenset()
    removed: frozenset = frozenset()
    two_sided: bool = False

    def __post_init__(self):
        _bits(self.pattern)
        object.__setattr__(self, "added", frozenset(int(x) for x in self.added))
        object.__setattr__(self, "removed", frozenset(int(x) for x in self.removed) - self.added)

    @property
    def period(self) -> int:
        return len(self.pattern)

    def contains(self, e: Element) -> bool:
        n = e[0] if isinstance(e, tuple) else e
        if n in self.added:
            return True
        if n in self.removed:
            return False
        if not self.two_sided and n < self.offset:
            return False
        return self.pattern[(n - self.offset) % self.period] == "1"

    def mask(self, lo: int, hi: int) -> np.ndarray:
        if hi <= lo:
            return np.zeros(0, dtype=bool)
        pat = np.frombuffer(self.pattern.encode(), dtype=np.uint8) == ord("1")
        ns = np.arange(lo, hi)
        out = pat[(ns - self.offset) % self.period]
        if not self.two_sided:
            out &= ns >= self.offset
        for x in self.removed:
            if lo <= x < hi:
                out[x - lo] = False
        for x in self.added:
            if lo <= x < hi:
                out[x - lo] = True
        return out

    @property
    def exception_span(self) -> tuple[int, int]:
        """Smallest ``[a, b)`` outside which the set is purely periodic."""
        pts = set(self.added) | set(self.removed)
        if not self.two_sided:
            pts.add(self.offset)
        if not pts:
            return (self.offset, self.offset)
        return (min(pts), max(pts) + 1)

    def describe(self) -> str:
        parts = [f"offset={self.offset}", f"pattern={self.pattern}"]
        if self.two_sided:
            parts.append("two_sided=1")
        if self.added:
            parts.append("add=" + "|".join(str(x) for x in sorted(self.added)))
        if self.removed:
            parts.append("remove=" + "|".join(str(x) for x in sorted(self.removed)))
        return "periodic:" + ",".join(parts)


@dataclass(frozen=True)
class Window(LargeSet):
    """Finite set inside ``[lo, hi)``; bit ``i`` of ``bits`` is membership of ``lo + i``."""

    lo: int
    hi: int
    bits: int

    def __post_init__(self):
        if self.hi < self.lo:
            raise SetParseError("window needs lo <= hi")
        if self.bits < 0 or self.bits >> (self.hi - self.lo):
            raise SetParseError("window bits exceed hi - lo")

    @classmethod
    def from_members(cls, lo: int, hi: int, members: Iterable[int]) -> Window:
        bits = 0
        for n in members:
            if not lo <= n < hi:
                raise SetParseError(f"{n} outside window [{lo}, {hi})")
            bits |= 1 << (n - lo)
        return cls(lo, hi, bits)

    def contains(self, e: Element) -> bool:
        n = e[0] if isinstance(e, tuple) else e
        return self.lo <= n < self.hi and bool((self.bits >> (n - self.lo)) & 1)

    def members(self) -> list[int]:
        return [self.lo + i for i in range(self.hi - self.lo) if (self.bits >> i) & 1]

    def describe(self) -> str:
        return f"window:lo={self.lo},hi={self.hi},bits={self.bits:x}"


@dataclass(frozen=True)
class FiniteSet(LargeSet):
    elems: frozenset

    def contains(self, e: Element) -> bool:
        return e in self.elems

    def describe(self) -> str:
        def fmt(x):
            return str(x) if not isinstance(x, tuple) else "(" + ",".join(map(str, x)) + ")"

        return "finite:" + "|".join(fmt(x) for x in sorted(self.elems, key=lambda x: (isinstance(x, tuple), x)))


@dataclass(frozen=True)
class Full(LargeSet):
    """The whole ambient."""

    ambient: Ambient

    def contains(self, e: Element) -> bool:
        return self.ambient.contains(e)

    def mask(self, lo: int, hi: int) -> np.ndarray:
        ns = np.arange(lo, hi)
        if self.ambient.kind == "N":
            return ns >= 0
        if self.ambient.kind == "cyclic":
            return (ns >= 0) & (ns < self.ambient.moduli[0])
        return np.ones(max(hi - lo, 0), dtype=bool)

    def describe(self) -> str:
        return "all"


@dataclass(frozen=True)
class TranslateUnion(LargeSet):
    """``U_{t in translates} t^{-1} base = {y in S : t + y in base for some t}``."""

    base: LargeSet
    translates: tuple
    ambient: Ambient

    def contains(self, e: Element) -> bool:
        if not self.ambient.contains(e):
            return False
        return any(self.base.contains(self.ambient.add(t, e)) for t in self.translates)

    def witness_translate(self, e: Element):
        """First translate ``t`` with ``t + e`` in the base set, else ``None``."""
        if not self.ambient.contains(e):
            return None
        for t in self.translates:
            if self.base.contains(self.ambient.add(t, e)):
                return t
        return None

    def mask(self, lo: int, hi: int) -> np.ndarray:
        if self.ambient.dim != 1 or self.ambient.kind == "cyclic":
            return super().mask(lo, hi)
        out = np.zeros(max(hi - lo, 0), dtype=bool)
        for t in self.translates:
            out |= self.base.mask(lo + t, hi + t)
        return out & Full(self.ambient).mask(lo, hi)

    def describe(self) -> str:
        return f"union of {list(self.translates)} translates of {self.base.describe()}"


@dataclass(frozen=True)
class Intersection(LargeSet):
    sets: tuple

    def contains(self, e: Element) -> bool:
        return all(s.contains(e) for s in self.sets)

    def mask(self, lo: int, hi: int) -> np.ndarray:
        out = np.ones(max(hi - lo, 0), dtype=bool)
        for s in self.sets:
            out &= s.mask(lo, hi)
        return out

    def describe(self) -> str:
        return " & ".join(s.describe() for s in self.sets)


def evens() -> EventuallyPeriodic:
    return EventuallyPeriodic("10")


def multiples(k: int, two_sided: bool = False) -> EventuallyPeriodic:
    return EventuallyPeriodic("1" + "0" * (k - 1), two_sided=two_sided)


def cofinite(start: int) -> EventuallyPeriodic:
    return EventuallyPeriodic("1", offset=start)


def _int_list(text: str) -> frozenset:
    return frozenset(int(v) for v in text.split("|") if v)


def parse_set(text: str, ambient: Ambient | None = None) -> LargeSet:
    """Parse the set DSL; see the module docstring."""
    s = text.strip()
    head, _, rest = s.partition(":")
    if head == "evens":
        return evens()
    if head == "all":
        if ambient is None:
            raise SetParseError("'all' needs an ambient")
        return Full(ambient)
    if head == "finite":
        items = []
        for tok in rest.split("|"):
            tok = tok.strip()
            if not tok:
                continue
            if tok.startswith("("):
                items.append(tuple(int(v) for v in tok.strip("()").split(",")))
            else:
                items.append(int(tok))
        return FiniteSet(frozenset(items))
    kv = {}
    for pos, part in enumerate(p for p in rest.split(",") if p):
        k, eq, v = part.partition("=")
        if not eq:
            raise SetParseError(f"expected key=value at field {pos} ({part!r}) in {text!r}")
        kv[k.strip()] = v.strip()
    try:
        if head == "periodic":
            unknown = set(kv) - {"offset", "pattern", "add", "remove", "two_sided"}
            if unknown:
                raise SetParseError(f"unknown periodic field(s) {sorted(unknown)} in {text!r}")
            return EventuallyPeriodic(
                kv["pattern"],
                offset=int(kv.get("offset", 0)),
                added=_int_list(kv.get("add", "")),
                removed=_int_list(kv.get("remove", "")),
                two_sided=kv.get("two_sided", "0") in ("1", "true", "yes"),
            )
        if head == "window":
            return Window(int(kv["lo"]), int(kv["hi"]), int(kv.get("bits", "0"), 16))
        if head == "cofinite":
            return cofinite(int(kv["from"]))
    except KeyError as exc:
        raise SetParseError(f"missing field {exc.args[0]!r} in {text!r}") from None
    raise SetParseError(f"unknown set kind {head!r} in {text!r}")
