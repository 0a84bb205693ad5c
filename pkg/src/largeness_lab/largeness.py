"""Witness searches and validators for thick, syndetic, piecewise syndetic
and J-sets.

Every search is bounded and deterministic.  A search that returns ``None``
has only shown that no witness exists *within its bounds*; the largeness
notions themselves quantify over all finite configurations, so only positive
witnesses are ever certain.  Validators re-check a claimed witness directly
against the definition and never reuse search state.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence as Seq

import numpy as np

from .reports import Report
from .semigroups import Ambient, Element
from .sets import EventuallyPeriodic, Full, LargeSet, TranslateUnion, Window

NAT = Ambient.naturals()


# -- sequences --------------------------------------------------------------


@dataclass(frozen=True)
class Sequence:
    """A map ``{1, 2, ...} -> S`` given by an explicit prefix and a tail rule.

    ``tail`` is ``None`` (undefined past the prefix), ``("const", c)``,
    ``("linear", c0, c1)`` meaning ``c0 + c1 * t``, or ``("periodic", p)``
    meaning ``f(t) = f(t - p)``.
    """

    prefix: tuple
    tail: tuple | None = None

    @classmethod
    def from_function(cls, fn: Callable[[int], Element], length: int, tail=None) -> Sequence:
        return cls(tuple(fn(t) for t in range(1, length + 1)), tail)

    @classmethod
    def constant(cls, c: Element, length: int = 8) -> Sequence:
        return cls((c,) * length, ("const", c))

    @classmethod
    def linear(cls, slope: int, intercept: int = 0, length: int = 8) -> Sequence:
        return cls(tuple(intercept + slope * t for t in range(1, length + 1)), ("linear", intercept, slope))

    @property
    def prefix_len(self) -> int:
        return len(self.prefix)

    def __call__(self, t: int) -> Element:
        if t < 1:
            raise IndexError(f"sequence index {t} < 1")
        if t <= len(self.prefix):
            return self.prefix[t - 1]
        if self.tail is None:
            raise IndexError(f"index {t} out of prefix range {len(self.prefix)}")
        kind = self.tail[0]
        if kind == "const":
            return self.tail[1]
        if kind == "linear":
            return self.tail[1] + self.tail[2] * t
        if kind == "periodic":
            p = self.tail[1]
            return self((t - 1 - len(self.prefix)) % p + len(self.prefix) - p + 1)
        raise ValueError(f"unknown tail rule {kind!r}")

    def shifted(self, offset: int, length: int | None = None) -> Sequence:
        """``n -> f(offset + n)``."""
        length = self.prefix_len if length is None else length
        return Sequence(tuple(self(offset + n) for n in range(1, length + 1)), _shift_tail(self.tail, offset))

    def describe(self) -> dict:
        return {"prefix": list(self.prefix), "tail": list(self.tail) if self.tail else None}


def _shift_tail(tail, offset):
    if tail is None or tail[0] in ("const", "periodic"):
        return tail
    _, c0, c1 = tail
    return ("linear", c0 + c1 * offset, c1)


def _check_family(fam: Seq[Sequence]) -> None:
    if not fam:
        raise ValueError("empty sequence family")


# -- witnesses --------------------------------------------------------------


@dataclass(frozen=True)
class ThickWitness:
    shift: Element


@dataclass
class PSWitness:
    """Translate set ``G`` plus one shift per answered query ``F``."""

    translates: tuple
    per_query: dict = field(default_factory=dict)


@dataclass(frozen=True)
class JWitnessCommutative:
    a: Element
    K: tuple


@dataclass(frozen=True)
class JWitnessGeneral:
    m: int
    a: tuple
    t: tuple


def _finite(F: Iterable[Element], ambient: Ambient) -> tuple:
    out = []
    for f in F:
        f = ambient.from_coords(ambient.coords(f))
        if f not in out:
            out.append(f)
    if not out:
        raise ValueError("finite subset must be nonempty")
    return tuple(out)


# -- thick ------------------------------------------------------------------


def _fast_line(ambient: Ambient) -> bool:
    return ambient.dim == 1 and ambient.kind != "cyclic"


def thick_witness(A: LargeSet, F: Iterable[Element], bound: int, ambient: Ambient = NAT) -> ThickWitness | None:
    """Least shift ``x`` in ``ambient.shifts(bound)`` with ``F + x`` inside ``A``."""
    F = _finite(F, ambient)
    if _fast_line(ambient):
        lo, hi = min(F), max(F) + bound + 1
        M = A.mask(lo, hi) & Full(ambient).mask(lo, hi)
        ok = np.ones(bound + 1, dtype=bool)
        for f in F:
            ok &= M[f - lo : f - lo + bound + 1]
        hits = np.flatnonzero(ok)
        return ThickWitness(int(hits[0])) if hits.size else None
    for x in ambient.shifts(bound):
        if all(ambient.contains(ambient.add(f, x)) and A.contains(ambient.add(f, x)) for f in F):
            return ThickWitness(x)
    return None


def validate_thick(A: LargeSet, F: Iterable[Element], shift: Element, ambient: Ambient = NAT) -> Report:
    rep = Report("thick witness")
    F = _finite(F, ambient)
    bad = [f for f in F if not (ambient.contains(ambient.add(f, shift)) and A.contains(ambient.add(f, shift)))]
    rep.add("F + shift inside A", not bad, shift=shift, first_violation=bad[0] if bad else None)
    return rep


def is_thick_exact(A: LargeSet) -> bool:
    """Exact thickness for the eventually periodic class over ``N`` or ``Z``.

    Such a set contains arbitrarily long intervals iff its periodic pattern
    is all ones: otherwise every run of members past the exceptions is
    shorter than one period.  Finite windows are never thick in an infinite
    ambient.
    """
    if isinstance(A, Full):
        return True
    if isinstance(A, Window):
        return False
    if not isinstance(A, EventuallyPeriodic):
        raise TypeError("exact thickness is only decided for eventually periodic sets")
    return set(A.pattern) == {"1"}


# -- syndetic ---------------------------------------------------------------


def _max_run(mask: np.ndarray) -> int:
    """Longest run of ``False`` in a boolean array."""
    if mask.size == 0:
        return 0
    padded = np.concatenate(([True], mask, [True]))
    idx = np.flatnonzero(padded)
    return int(np.max(np.diff(idx)) - 1)


def _cyclic_run(bits: str) -> int:
    if "1" not in bits:
        return len(bits)
    doubled = np.frombuffer((bits + bits).encode(), dtype=np.uint8) == ord("1")
    return _max_run(doubled)


def syndetic_gap_bound(A: LargeSet, ambient: Ambient = NAT) -> int | None:
    """Least ``g`` such that every length-``g`` interval of the ambient meets ``A``.

    ``None`` when gaps are unbounded, e.g. a set with a floor viewed inside
    ``Z``, or a finite set in an infinite ambient.
    """
    if ambient.dim != 1:
        raise ValueError("gap bounds are defined for one-dimensional ambients")
    if ambient.kind == "cyclic":
        m = ambient.moduli[0]
        bits = "".join("1" if A.contains(r) else "0" for r in range(m))
        return None if "1" not in bits else _cyclic_run(bits) + 1
    if isinstance(A, Full):
        return 1
    if isinstance(A, Window):
        return None
    if not isinstance(A, EventuallyPeriodic):
        raise TypeError("gap bounds are decided for eventually periodic sets")
    if "1" not in A.pattern:
        return None
    if ambient.kind == "Z" and not A.two_sided:
        return None
    P = A.period
    a, b = A.exception_span
    lo = 0 if ambient.kind == "N" else a - 3 * P
    hi = max(b, lo) + 3 * P
    # runs touching either cut end lie in the purely periodic region, so the
    # cyclic run length of the pattern dominates them
    return max(_max_run(A.mask(lo, hi)), _cyclic_run(A.pattern)) + 1


# -- piecewise syndetic -----------------------------------------------------


def _subsets_by_size(items: Seq) -> Iterable[tuple]:
    for k in range(1, len(items) + 1):
        yield from itertools.combinations(items, k)


def ps_common_witness(
    A: LargeSet, queries: Seq[Iterable[Element]], g_bound: int, x_bound: int, ambient: Ambient = NAT
) -> PSWitness | None:
    """Smallest translate set ``G`` (by size, then lexicographic) for which
    every query ``F`` has a shift ``x`` with ``F + x`` inside ``U_{t in G} t^{-1}A``."""
    queries = [_finite(F, ambient) for F in queries]
    cands = list(ambient.shifts(g_bound))
    widest = TranslateUnion(A, tuple(cands), ambient)
    if any(thick_witness(widest, F, x_bound, ambient) is None for F in queries):
        return None
    for G in _subsets_by_size(cands):
        U = TranslateUnion(A, G, ambient)
        shifts = {}
        for F in queries:
            w = thick_witness(U, F, x_bound, ambient)
            if w is None:
                break
            shifts[F] = w.shift
        else:
            return PSWitness(G, shifts)
    return None


def ps_witness(
    A: LargeSet, F: Iterable[Element], g_bound: int, x_bound: int, ambient: Ambient = NAT
) -> tuple[tuple, Element] | None:
    """``(G, x)`` with ``G`` inside ``[0, g_bound]`` and ``F + x`` covered by translates of ``A``."""
    F = _finite(F, ambient)
    w = ps_common_witness(A, [F], g_bound, x_bound, ambient)
    return None if w is None else (w.translates, w.per_query[F])


def validate_ps(A: LargeSet, G: Seq[Element], F: Iterable[Element], x: Element, ambient: Ambient = NAT) -> Report:
    rep = Report("piecewise syndetic witness")
    F = _finite(F, ambient)
    U = TranslateUnion(A, tuple(G), ambient)
    bad = [f for f in F if not U.contains(ambient.add(f, x))]
    rep.add("F + x inside union of translates", not bad, G=list(G), x=x, first_violation=bad[0] if bad else None)
    return rep


# -- J-sets -----------------------------------------------------------------


def x_product(m: int, a: Seq[Element], t: Seq[int], f: Sequence, ambient: Ambient = NAT) -> Element:
    """``a(1) f(t(1)) a(2) f(t(2)) ... a(m) f(t(m)) a(m+1)`` written additively."""
    if len(a) != m + 1 or len(t) != m:
        raise ValueError(f"need m+1={m + 1} anchors and m={m} indices")
    if any(t[i] >= t[i + 1] for i in range(m - 1)) or (m and t[0] < 1):
        raise ValueError(f"indices {tuple(t)} must be strictly increasing from 1")
    total = ambient.zero
    for j in range(m):
        total = ambient.add(total, a[j])
        total = ambient.add(total, f(t[j]))
    return ambient.add(total, a[m])


def _family_len(fam: Seq[Sequence]) -> int:
    return min(f.prefix_len for f in fam)


def j_witness_commutative(
    A: LargeSet,
    fam: Seq[Sequence],
    a_bound: int,
    k_size_bound: int,
    ambient: Ambient = NAT,
    length: int | None = None,
) -> JWitnessCommutative | None:
    """``(a, K)`` with ``a + sum_{t in K} f(t)`` in ``A`` for every ``f``.

    Order: ``|K|`` ascending, then ``K`` lexicographic, then ``a`` ascending.
    """
    _check_family(fam)
    L = _family_len(fam) if length is None else length
    shifts = list(ambient.shifts(a_bound))
    for k in range(1, min(k_size_bound, L) + 1):
        for K in itertools.combinations(range(1, L + 1), k):
            sums = [ambient.sum(f(t) for t in K) for f in fam]
            for a in shifts:
                if all(A.contains(ambient.add(a, s)) for s in sums):
                    return JWitnessCommutative(a, K)
    return None


def validate_j_commutative(A: LargeSet, fam: Seq[Sequence], w: JWitnessCommutative, ambient: Ambient = NAT) -> Report:
    rep = Report("J-set witness (sum form)")
    vals = [ambient.add(w.a, ambient.sum(f(t) for t in w.K)) for f in fam]
    bad = [i for i, v in enumerate(vals) if not A.contains(v)]
    rep.add("a + sum_K f(t) in A for every f", not bad and len(set(w.K)) == len(w.K) and bool(w.K),
            a=w.a, K=list(w.K), first_violation=bad[0] if bad else None)
    return rep


def j_witness_general(
    A: LargeSet,
    fam: Seq[Sequence],
    m_bound: int,
    a_bound: int,
    t_range: int,
    ambient: Ambient = NAT,
) -> JWitnessGeneral | None:
    """``(m, a, t)`` with ``x(m, a, t, f)`` in ``A`` for every ``f``.

    Order: ``m`` ascending, then ``t`` lexicographic, then ``a`` lexicographic.
    """
    _check_family(fam)
    shifts = list(ambient.shifts(a_bound))
    for m in range(1, m_bound + 1):
        for t in itertools.combinations(range(1, t_range + 1), m):
            for a in itertools.product(shifts, repeat=m + 1):
                if all(A.contains(x_product(m, a, t, f, ambient)) for f in fam):
                    return JWitnessGeneral(m, tuple(a), tuple(t))
    return None


def validate_j_general(A: LargeSet, fam: Seq[Sequence], w: JWitnessGeneral, ambient: Ambient = NAT) -> Report:
    rep = Report("J-set witness (product form)")
    try:
        vals = [x_product(w.m, w.a, w.t, f, ambient) for f in fam]
    except (ValueError, IndexError) as exc:
        rep.add("well-formed", False, error=str(exc))
        return rep
    bad = [i for i, v in enumerate(vals) if not A.contains(v)]
    rep.add("x(m,a,t,f) in A for every f", not bad, m=w.m, a=list(w.a), t=list(w.t),
            first_violation=bad[0] if bad else None)
    return rep


def general_from_commutative(w: JWitnessCommutative, ambient: Ambient = NAT) -> JWitnessGeneral:
    """``(a, K)`` as the product-form witness ``m = |K|``, ``a = (a, 0, ..., 0)``."""
    K = tuple(sorted(w.K))
    return JWitnessGeneral(len(K), (w.a,) + (ambient.zero,) * len(K), K)
