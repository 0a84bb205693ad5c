"""Concrete commutative cancellative ambients and their difference groups.

Elements of one-dimensional ambients are plain ``int``; elements of
``N^d``, ``Z^d`` and products of several cyclic groups are tuples of ints.

>>> N = Ambient.parse("N")
>>> D = DifferenceGroup(N)
>>> D.normalize(D.embed(3, 5))
DiffPair(plus=3, minus=0)
>>> D.to_value(D.add(DiffPair(5, 2), DiffPair(1, 4)))
0
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Any, Iterable, Iterator, Sequence

Element = Any  # int for dimension 1, tuple[int, ...] otherwise

NATURALS = "N"
INTEGERS = "Z"
CYCLIC = "cyclic"


class AmbientError(ValueError):
    """Raised on malformed ambients or elements from the wrong ambient."""


@dataclass(frozen=True)
class Ambient:
    """``N``, ``Z``, ``N^d``, ``Z^d`` or a product of cyclic groups.

    The operation is always componentwise addition (reduced modulo the
    moduli for ``CYCLIC``).  ``N`` includes 0.
    """

    kind: str
    dim: int = 1
    moduli: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in (NATURALS, INTEGERS, CYCLIC):
            raise AmbientError(f"unknown ambient kind {self.kind!r}")
        if self.kind == CYCLIC:
            if not self.moduli or any(m < 2 for m in self.moduli):
                raise AmbientError("cyclic moduli must be integers >= 2")
            object.__setattr__(self, "dim", len(self.moduli))
        elif self.dim < 1:
            raise AmbientError("dimension must be >= 1")

    # -- construction -----------------------------------------------------

    @classmethod
    def naturals(cls, dim: int = 1) -> Ambient:
        return cls(NATURALS, dim)

    @classmethod
    def integers(cls, dim: int = 1) -> Ambient:
        return cls(INTEGERS, dim)

    @classmethod
    def cyclic(cls, *moduli: int) -> Ambient:
        return cls(CYCLIC, len(moduli), tuple(moduli))

    @classmethod
    def parse(cls, text: str) -> Ambient:
        """Parse ``N``, ``Z``, ``N^2``, ``Z^3``, ``Z_6`` or ``Z_4xZ_6``."""
        s = text.strip().replace(" ", "")
        m = re.fullmatch(r"([NZ])(?:\^(\d+))?", s)
        if m:
            dim = int(m.group(2) or 1)
            return cls(NATURALS if m.group(1) == "N" else INTEGERS, dim)
        parts = s.split("x")
        moduli = []
        for p in parts:
            mm = re.fullmatch(r"Z_(\d+)", p)
            if not mm:
                raise AmbientError(f"cannot parse ambient {text!r} at {p!r}")
            moduli.append(int(mm.group(1)))
        return cls.cyclic(*moduli)

    def __str__(self) -> str:
        if self.kind == CYCLIC:
            return "x".join(f"Z_{m}" for m in self.moduli)
        return self.kind if self.dim == 1 else f"{self.kind}^{self.dim}"

    # -- structure --------------------------------------------------------

    @property
    def is_group(self) -> bool:
        return self.kind != NATURALS

    @property
    def is_finite(self) -> bool:
        return self.kind == CYCLIC

    @property
    def order(self) -> int | None:
        if not self.is_finite:
            return None
        n = 1
        for m in self.moduli:
            n *= m
        return n

    @property
    def zero(self) -> Element:
        return 0 if self.dim == 1 else (0,) * self.dim

    def coords(self, e: Element) -> tuple[int, ...]:
        if self.dim == 1:
            if isinstance(e, tuple):
                if len(e) != 1:
                    raise AmbientError(f"dimension mismatch: {e!r} in {self}")
                return (int(e[0]),)
            return (int(e),)
        if not isinstance(e, (tuple, list)) or len(e) != self.dim:
            raise AmbientError(f"dimension mismatch: {e!r} in {self}")
        return tuple(int(c) for c in e)

    def from_coords(self, cs: Sequence[int]) -> Element:
        if self.kind == CYCLIC:
            cs = [c % m for c, m in zip(cs, self.moduli)]
        return int(cs[0]) if self.dim == 1 else tuple(int(c) for c in cs)

    def element(self, e: Element) -> Element:
        """Coerce ``e`` into canonical form, checking it lies in the ambient."""
        x = self.from_coords(self.coords(e))
        if not self.contains(x):
            raise AmbientError(f"{e!r} is not an element of {self}")
        return x

    def contains(self, e: Element) -> bool:
        try:
            cs = self.coords(e)
        except (AmbientError, TypeError, ValueError):
            return False
        if self.kind == NATURALS:
            return all(c >= 0 for c in cs)
        if self.kind == CYCLIC:
            return all(0 <= c < m for c, m in zip(cs, self.moduli))
        return True

    def add(self, a: Element, b: Element) -> Element:
        return self.from_coords([x + y for x, y in zip(self.coords(a), self.coords(b))])

    def sum(self, items: Iterable[Element]) -> Element:
        total = self.zero
        for x in items:
            total = self.add(total, x)
        return total

    def neg(self, a: Element) -> Element:
        if not self.is_group:
            raise AmbientError(f"{self} has no inverses")
        return self.from_coords([-c for c in self.coords(a)])

    def sub(self, a: Element, b: Element) -> Element:
        """``a - b`` computed coordinatewise; the result may leave ``N``."""
        return self.from_coords([x - y for x, y in zip(self.coords(a), self.coords(b))])

    def scale(self, k: int, a: Element) -> Element:
        return self.from_coords([k * c for c in self.coords(a)])

    def shifts(self, bound: int) -> Iterator[Element]:
        """Candidate shifts in ``[0, bound]^dim`` in search order.

        One-dimensional ambients are scanned ``0, 1, ..., bound``; higher
        dimensions by coordinate sum, then lexicographically.
        """
        if bound < 0:
            return
        if self.kind == CYCLIC:
            ranges = [range(min(bound, m - 1) + 1) for m in self.moduli]
        else:
            ranges = [range(bound + 1)] * self.dim
        if self.dim == 1:
            yield from ranges[0]
            return
        for cs in sorted(itertools.product(*ranges), key=lambda c: (sum(c), c)):
            yield cs

    def elements(self) -> Iterator[Element]:
        if not self.is_finite:
            raise AmbientError(f"{self} is infinite")
        for cs in itertools.product(*(range(m) for m in self.moduli)):
            yield self.from_coords(cs)

    def sort_key(self, e: Element) -> tuple:
        """Fixed total order used by deterministic choosers."""
        cs = self.coords(e)
        return (sum(abs(c) for c in cs), tuple((abs(c), c < 0) for c in cs))

    def difference_group(self) -> Ambient:
        """Concrete model of ``S - S``: ``N^d`` becomes ``Z^d``, groups are unchanged."""
        if self.kind == NATURALS:
            return Ambient(INTEGERS, self.dim)
        return self

    def parse_element(self, text: str) -> Element:
        vals = [int(v) for v in text.replace("(", "").replace(")", "").split(",") if v.strip()]
        return self.element(vals[0] if self.dim == 1 and len(vals) == 1 else tuple(vals))


@dataclass(frozen=True)
class DiffPair:
    """Formal difference ``plus - minus`` of two elements of ``S``."""

    plus: Element
    minus: Element


class DifferenceGroup:
    """The group ``S - S`` of a commutative cancellative semigroup ``S``.

    Equality is decided by the cross law ``a + d == c + b``; no step assumes
    that subtraction is available inside ``S``.
    """

    def __init__(self, base: Ambient):
        self.base = base
        self.model = base.difference_group()

    def __repr__(self) -> str:
        return f"DifferenceGroup({self.base})"

    def pair(self, plus: Element, minus: Element) -> DiffPair:
        return DiffPair(self.base.element(plus), self.base.element(minus))

    def embed(self, a: Element, base: Element | None = None) -> DiffPair:
        """``a -> (a + b) - b`` for a fixed ``b`` (default the identity)."""
        b = self.base.zero if base is None else self.base.element(base)
        a = self.base.element(a)
        return DiffPair(self.base.add(a, b), b)

    def eq(self, p: DiffPair, q: DiffPair) -> bool:
        B = self.base
        return B.add(p.plus, q.minus) == B.add(q.plus, p.minus)

    def add(self, p: DiffPair, q: DiffPair) -> DiffPair:
        B = self.base
        return self.normalize(DiffPair(B.add(p.plus, q.plus), B.add(p.minus, q.minus)))

    def neg(self, p: DiffPair) -> DiffPair:
        return DiffPair(p.minus, p.plus)

    def zero(self) -> DiffPair:
        return DiffPair(self.base.zero, self.base.zero)

    def normalize(self, p: DiffPair) -> DiffPair:
        """Unique representative: common part removed for ``N`` kinds,
        ``(a - b, 0)`` for ambients that are already groups."""
        B = self.base
        a, b = B.coords(p.plus), B.coords(p.minus)
        if B.kind == NATURALS:
            m = [min(x, y) for x, y in zip(a, b)]
            return DiffPair(
                B.from_coords([x - k for x, k in zip(a, m)]),
                B.from_coords([y - k for y, k in zip(b, m)]),
            )
        return DiffPair(B.from_coords([x - y for x, y in zip(a, b)]), B.zero)

    def in_base(self, p: DiffPair) -> bool:
        """Whether ``p`` represents an element of ``S`` itself."""
        return self.normalize(p).minus == self.base.zero

    def to_base(self, p: DiffPair) -> Element:
        q = self.normalize(p)
        if q.minus != self.base.zero:
            raise AmbientError(f"{p} does not lie in {self.base}")
        return q.plus

    def to_value(self, p: DiffPair) -> Element:
        """Image of ``p`` in the concrete model (``Z^d`` for ``N^d``)."""
        return self.model.sub(self.model.element(p.plus), self.model.element(p.minus))

    def from_value(self, v: Element) -> DiffPair:
        cs = self.model.coords(v)
        if self.base.kind == NATURALS:
            return DiffPair(
                self.base.from_coords([max(c, 0) for c in cs]),
                self.base.from_coords([max(-c, 0) for c in cs]),
            )
        return DiffPair(self.base.from_coords(cs), self.base.zero)

    def lift(self, x: Element | DiffPair) -> DiffPair:
        """Accept either a pair or a value of the concrete model."""
        return x if isinstance(x, DiffPair) else self.from_value(x)

    def sum(self, items: Iterable[DiffPair]) -> DiffPair:
        total = self.zero()
        for p in items:
            total = self.add(total, p)
        return total


def embed(a: Element, base: Element, ambient: Ambient) -> DiffPair:
    return DifferenceGroup(ambient).embed(a, base)


def diff_add(p: DiffPair, q: DiffPair, ambient: Ambient) -> DiffPair:
    return DifferenceGroup(ambient).add(p, q)


def diff_normalize(p: DiffPair, ambient: Ambient) -> DiffPair:
    return DifferenceGroup(ambient).normalize(p)


def diff_eq(p: DiffPair, q: DiffPair, ambient: Ambient) -> bool:
    return DifferenceGroup(ambient).eq(p, q)
