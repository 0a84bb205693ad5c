"""Semigroup homomorphisms between the concrete ambients.

Syntax: ``scale:2``, ``mod:6``, ``matrix:[[1,0],[1,1]]``, ``id``; several
maps separated by ``;`` compose left to right (``scale:2;mod:6``).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable

from .semigroups import CYCLIC, INTEGERS, NATURALS, Ambient, Element
from .sets import EventuallyPeriodic, FiniteSet, Full, LargeSet


class HomError(ValueError):
    pass


class Hom:
    source: Ambient

    @property
    def target(self) -> Ambient:
        raise NotImplementedError

    def __call__(self, x: Element) -> Element:
        raise NotImplementedError

    @property
    def is_identity(self) -> bool:
        return False

    def preimage(self, y: Element, bound: int = 64) -> Element | None:
        """Least preimage of ``y`` in the source under ``Ambient.sort_key``."""
        return _search_preimage(self, y, bound)

    def check_law(self, pairs: Iterable[tuple]) -> bool:
        S, T = self.source, self.target
        return all(self(S.add(x, y)) == T.add(self(x), self(y)) for x, y in pairs)


def _box(source: Ambient, bound: int):
    if source.is_finite:
        return sorted(source.elements(), key=source.sort_key)
    lo = 0 if source.kind == NATURALS else -bound
    pts = itertools.product(range(lo, bound + 1), repeat=source.dim)
    return sorted((source.from_coords(p) for p in pts), key=source.sort_key)


def _search_preimage(phi: Hom, y: Element, bound: int) -> Element | None:
    for x in _box(phi.source, bound):
        if phi(x) == y:
            return x
    return None


@dataclass(frozen=True)
class Scale(Hom):
    """``x -> c x`` on any non-cyclic ambient (coordinatewise)."""

    c: int
    source: Ambient = Ambient.naturals()

    def __post_init__(self):
        if self.source.kind == NATURALS and self.c < 0:
            raise HomError("negative scale does not map N into N")

    @property
    def target(self) -> Ambient:
        return self.source

    @property
    def is_identity(self) -> bool:
        return self.c == 1

    def __call__(self, x):
        return self.source.scale(self.c, x)

    def preimage(self, y, bound: int = 64):
        cs = self.source.coords(y)
        if self.source.kind == CYCLIC:
            return _search_preimage(self, y, bound)
        if self.c == 0:
            return self.source.zero if all(v == 0 for v in cs) else None
        if any(v % self.c for v in cs):
            return None
        x = self.source.from_coords([v // self.c for v in cs])
        return x if self.source.contains(x) else None

    def describe(self) -> str:
        return f"scale:{self.c}"


@dataclass(frozen=True)
class ModReduction(Hom):
    """``Z -> Z_m`` (or ``N -> Z_m``), ``x -> x mod m``."""

    m: int
    source: Ambient = Ambient.integers()

    def __post_init__(self):
        if self.m < 2 or self.source.dim != 1 or self.source.kind == CYCLIC:
            raise HomError("mod reduction needs m >= 2 on N or Z")

    @property
    def target(self) -> Ambient:
        return Ambient.cyclic(self.m)

    def __call__(self, x):
        return self.source.coords(x)[0] % self.m

    def preimage(self, y, bound: int = 64):
        return y % self.m

    def describe(self) -> str:
        return f"mod:{self.m}"


@dataclass(frozen=True)
class MatrixMap(Hom):
    """``x -> M x`` from ``Z^d`` (or ``N^d``) to ``Z^k``; into ``N^k`` when
    the source is ``N^d`` and every entry is nonnegative."""

    matrix: tuple
    source: Ambient = Ambient.integers()

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.matrix)
        object.__setattr__(self, "matrix", rows)
        if not rows or any(len(r) != self.source.dim for r in rows) or self.source.kind == CYCLIC:
            raise HomError(f"matrix shape does not fit source {self.source}")

    @property
    def target(self) -> Ambient:
        k = len(self.matrix)
        if self.source.kind == NATURALS and all(v >= 0 for r in self.matrix for v in r):
            return Ambient(NATURALS, k)
        return Ambient(INTEGERS, k)

    @property
    def is_identity(self) -> bool:
        d = self.source.dim
        return len(self.matrix) == d and all(self.matrix[i][j] == (i == j) for i in range(d) for j in range(d))

    def __call__(self, x):
        cs = self.source.coords(x)
        return self.target.from_coords([sum(a * b for a, b in zip(row, cs)) for row in self.matrix])

    def describe(self) -> str:
        return "matrix:" + json.dumps([list(r) for r in self.matrix], separators=(",", ":"))


@dataclass(frozen=True)
class Composite(Hom):
    parts: tuple

    def __post_init__(self):
        if not self.parts:
            raise HomError("empty composite")
        for a, b in zip(self.parts, self.parts[1:]):
            if a.target != b.source:
                raise HomError(f"cannot compose {a.describe()} into {b.describe()}")

    @property
    def source(self) -> Ambient:
        return self.parts[0].source

    @property
    def target(self) -> Ambient:
        return self.parts[-1].target

    @property
    def is_identity(self) -> bool:
        return all(p.is_identity for p in self.parts)

    def __call__(self, x):
        for p in self.parts:
            x = p(x)
        return x

    def preimage(self, y, bound: int = 64):
        for p in reversed(self.parts):
            y = p.preimage(y, bound)
            if y is None:
                return None
        return y

    def describe(self) -> str:
        return ";".join(p.describe() for p in self.parts)


def identity(source: Ambient) -> Hom:
    return Scale(1, source)


def parse_hom(text: str, source: Ambient) -> Hom:
    parts, amb = [], source
    for tok in (t.strip() for t in text.split(";")):
        head, _, arg = tok.partition(":")
        try:
            if head == "id":
                h = identity(amb)
            elif head == "scale":
                h = Scale(int(arg), amb)
            elif head == "mod":
                h = ModReduction(int(arg), amb)
            elif head == "matrix":
                h = MatrixMap(tuple(tuple(r) for r in json.loads(arg)), amb)
            else:
                raise HomError(f"unknown homomorphism {head!r} in {text!r}")
        except (ValueError, json.JSONDecodeError) as exc:
            raise HomError(f"cannot parse {tok!r}: {exc}") from None
        parts.append(h)
        amb = h.target
    return parts[0] if len(parts) == 1 else Composite(tuple(parts))


def _scale_periodic(A: EventuallyPeriodic, c: int) -> EventuallyPeriodic:
    pattern = "".join(bit + "0" * (c - 1) for bit in A.pattern)
    return EventuallyPeriodic(
        pattern,
        offset=c * A.offset,
        added=frozenset(c * x for x in A.added),
        removed=frozenset(c * x for x in A.removed),
        two_sided=A.two_sided,
    )


def _reduce_periodic(A: EventuallyPeriodic, m: int) -> EventuallyPeriodic:
    # each pattern residue class is infinite, so finite removals never empty it
    residues = {x % m for x in A.added}
    for i, bit in enumerate(A.pattern):
        if bit == "1":
            residues |= {(A.offset + i + k * A.period) % m for k in range(m)}
    return EventuallyPeriodic("".join("1" if r in residues else "0" for r in range(m)), two_sided=True)


def image_set(phi: Hom, A: LargeSet, window: tuple = (-64, 65)) -> LargeSet:
    """``phi(A)``; exact for scalings and reductions of eventually periodic
    sets, otherwise materialized from the source points inside ``window``."""
    if phi.is_identity:
        return A
    if isinstance(phi, Composite):
        for p in phi.parts:
            A = image_set(p, A, window)
        return A
    S = phi.source
    if isinstance(A, Full):
        if isinstance(phi, ModReduction):
            return Full(phi.target)
        if isinstance(phi, Scale) and S.dim == 1 and phi.c >= 1:
            return EventuallyPeriodic("1" + "0" * (phi.c - 1), two_sided=S.kind == INTEGERS)
    if isinstance(A, EventuallyPeriodic):
        if isinstance(phi, Scale) and phi.c >= 1:
            return _scale_periodic(A, phi.c)
        if isinstance(phi, ModReduction):
            return _reduce_periodic(A, phi.m)
    if S.is_finite:
        pts = S.elements()
    else:
        lo, hi = window
        lo = max(lo, 0) if S.kind == NATURALS else lo
        pts = (S.from_coords(p) for p in itertools.product(range(lo, hi), repeat=S.dim))
    return FiniteSet(frozenset(phi(x) for x in pts if A.contains(x)))
