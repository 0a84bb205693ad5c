"""Collectionwise piecewise syndetic tables and downward directed families.

Both notions quantify over every finite configuration, so everything here
is a sampled check on explicit queries and windows.  A passing report says
the stored witnesses satisfy the definitions at the sampled points; it is
not a proof of centrality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Hashable, Iterable, Sequence as Seq

from .largeness import NAT, Sequence, _finite, j_witness_commutative, ps_common_witness
from .reports import Report
from .semigroups import Ambient, Element
from .sets import Intersection, LargeSet

QUASI_CENTRAL = "quasi_central"
CENTRAL = "central"
C_SET = "c_set"


@dataclass
class CwpsTable:
    """Functions ``K(calF)`` and ``x(calH, F)`` over a finite family of sets.

    Subfamilies are frozensets of indices into ``family``.  ``x`` may return
    ``None`` when a search-backed table has no answer within its bounds.
    """

    family: tuple
    K: Callable[[frozenset], tuple]
    x: Callable[[frozenset, tuple], Element | None]
    ambient: Ambient = NAT

    def tabulate(self, queries: Iterable[tuple]) -> dict:
        """Materialize the stored values touched by ``queries``."""
        Ks, xs = {}, {}
        for calF, calH, F in queries:
            Ks[_key(calF)] = list(self.K(frozenset(calF)))
            xs[f"{_key(calH)}|{list(F)}"] = self.x(frozenset(calH), tuple(F))
        return {"K": Ks, "x": xs}


def _key(indices) -> str:
    return ",".join(str(i) for i in sorted(indices))


def covered(table: CwpsTable, calF: frozenset, y: Element) -> bool:
    """Whether ``y`` lies in ``U_{t in K(calF)} t^{-1}(intersection of calF)``."""
    amb = table.ambient
    sets = [table.family[i] for i in calF]
    for t in table.K(calF):
        z = amb.add(t, y)
        if all(A.contains(z) for A in sets):
            return True
    return False


def validate_cwps(table: CwpsTable, queries: Iterable[tuple]) -> Report:
    """Check ``F + x(calH, F)`` inside ``U_{t in K(calF)} t^{-1}(cap calF)`` per query.

    Each query is ``(calF, calH, F)`` with ``calF`` a nonempty subfamily of
    ``calH``.
    """
    rep = Report("collectionwise piecewise syndetic table (sampled)")
    amb = table.ambient
    for calF, calH, F in queries:
        calF, calH = frozenset(calF), frozenset(calH)
        if not calF or not calF <= calH:
            raise ValueError(f"query needs nonempty calF inside calH, got {sorted(calF)} / {sorted(calH)}")
        F = _finite(F, amb)
        x = table.x(calH, F)
        name = f"calF={sorted(calF)} calH={sorted(calH)} F={list(F)}"
        if x is None:
            rep.add(name, False, reason="no x value within bounds")
            continue
        bad = next((f for f in F if not covered(table, calF, amb.add(f, x))), None)
        rep.add(name, bad is None, x=x, violating=None if bad is None else amb.add(bad, x))
    return rep


def search_cwps_table(
    family: Seq[LargeSet],
    probes: Seq[Iterable[Element]],
    g_bound: int,
    x_bound: int,
    ambient: Ambient = NAT,
) -> CwpsTable:
    """Search-backed table.

    ``K(calF)`` is the smallest translate set making the intersection of
    ``calF`` piecewise syndetic on every probe; ``x(calH, F)`` is the least
    shift that serves every nonempty ``calF`` inside ``calH`` at once.
    """
    family = tuple(family)
    probes = [_finite(p, ambient) for p in probes]

    @lru_cache(maxsize=None)
    def K(calF: frozenset) -> tuple:
        inter = Intersection(tuple(family[i] for i in sorted(calF)))
        w = ps_common_witness(inter, probes, g_bound, x_bound, ambient)
        return w.translates if w is not None else (ambient.zero,)

    table = CwpsTable(family, K, None, ambient)

    @lru_cache(maxsize=None)
    def x(calH: frozenset, F: tuple) -> Element | None:
        subs = [frozenset(c) for k in range(1, len(calH) + 1) for c in itertools.combinations(sorted(calH), k)]
        for s in ambient.shifts(x_bound):
            if all(covered(table, c, ambient.add(f, s)) for c in subs for f in F):
                return s
        return None

    table.x = x
    return table


def constant_table(family: Seq[LargeSet], K: Iterable[Element], x: Element, ambient: Ambient = NAT) -> CwpsTable:
    K = tuple(K)
    return CwpsTable(tuple(family), lambda calF: K, lambda calH, F: x, ambient)


# -- directed families ------------------------------------------------------


@dataclass
class DirectedFamily:
    """Finite index set with ``C_F`` per index; ``order`` holds pairs ``(F, G)``
    meaning ``F >= G`` (reflexivity is implied)."""

    index: tuple
    sets: dict
    order: frozenset
    kind: str = QUASI_CENTRAL
    cwps: CwpsTable | None = None

    @classmethod
    def chain(cls, sets: dict, kind: str = QUASI_CENTRAL, cwps: CwpsTable | None = None) -> DirectedFamily:
        """Totally ordered index set, ordered by the labels' natural order."""
        idx = tuple(sorted(sets))
        order = frozenset((F, G) for F in idx for G in idx if F >= G)
        return cls(idx, dict(sets), order, kind, cwps)

    def geq(self, F: Hashable, G: Hashable) -> bool:
        return F == G or (F, G) in self.order


@dataclass
class CheckConfig:
    """Sampling parameters for :func:`check_directed_family`."""

    window: tuple = (0, 60)
    queries: list = field(default_factory=lambda: [(0, 1, 2, 3)])
    families: list = field(default_factory=lambda: [[Sequence.linear(1)], [Sequence.constant(1)]])
    g_bound: int = 4
    x_bound: int = 60
    a_bound: int = 8
    k_size_bound: int = 3
    max_samples: int = 12
    max_subfamilies: int = 64


def _points(window) -> list:
    if len(window) == 2 and all(isinstance(v, int) for v in window):
        return list(range(window[0], window[1]))
    return list(window)


def check_structure(fam: DirectedFamily, ambient: Ambient, cfg: CheckConfig, A: LargeSet | None = None) -> Report:
    """Directedness, nesting, containment in ``A`` and the translation-closure
    condition, all on the window."""
    rep = Report(f"directed family ({fam.kind})")
    pts = _points(cfg.window)
    members = {F: [p for p in pts if fam.sets[F].contains(p)] for F in fam.index}

    bad_ub = next(((F, G) for F in fam.index for G in fam.index
                   if not any(fam.geq(H, F) and fam.geq(H, G) for H in fam.index)), None)
    rep.add("directed (upper bounds exist)", bad_ub is None, pair=bad_ub)

    nest_fail = None
    for F in fam.index:
        for G in fam.index:
            if F != G and fam.geq(F, G):
                out = next((p for p in members[F] if not fam.sets[G].contains(p)), None)
                if out is not None and nest_fail is None:
                    nest_fail = {"F": F, "G": G, "element": out}
    rep.add("downward nested (F >= G implies C_F inside C_G)", nest_fail is None, failure=nest_fail)

    if A is not None:
        out = next(((F, p) for F in fam.index for p in members[F] if not A.contains(p)), None)
        rep.add("every C_F inside A", out is None, failure=out)

    closure_fail, chosen = None, {}
    for F in fam.index:
        for x in members[F][: cfg.max_samples]:
            G = next((G for G in fam.index
                      if all(fam.sets[F].contains(ambient.add(x, y)) for y in members[G])), None)
            chosen[f"{F}:{x}"] = G
            if G is None and closure_fail is None:
                closure_fail = {"F": F, "x": x}
    rep.add("closure: some C_G inside x^{-1} C_F", closure_fail is None, failure=closure_fail, chosen=chosen)
    return rep


def subfamilies(fam: DirectedFamily, cap: int) -> list[frozenset]:
    out = []
    for k in range(1, len(fam.index) + 1):
        for c in itertools.combinations(fam.index, k):
            out.append(frozenset(c))
            if len(out) >= cap:
                return out
    return out


def cwps_queries(fam: DirectedFamily, cfg: CheckConfig) -> list[tuple]:
    pos = {F: i for i, F in enumerate(fam.index)}
    subs = [frozenset(pos[F] for F in s) for s in subfamilies(fam, cfg.max_subfamilies)]
    return [(c, h, tuple(q)) for h in subs for c in subs if c <= h for q in cfg.queries]


def family_table(fam: DirectedFamily, ambient: Ambient, cfg: CheckConfig) -> CwpsTable:
    if fam.cwps is not None:
        return fam.cwps
    return search_cwps_table([fam.sets[F] for F in fam.index], cfg.queries, cfg.g_bound, cfg.x_bound, ambient)


def check_directed_family(
    fam: DirectedFamily, ambient: Ambient = NAT, cfg: CheckConfig | None = None, A: LargeSet | None = None
) -> Report:
    """Sampled check of the chain characterization for ``fam.kind``.

    quasi_central: each ``C_F`` piecewise syndetic on the queries;
    central: the family's table validates on all subfamily queries;
    c_set: every finite intersection has a J-witness on each sample family.
    """
    cfg = cfg or CheckConfig()
    rep = check_structure(fam, ambient, cfg, A)
    if fam.kind == QUASI_CENTRAL:
        for F in fam.index:
            w = ps_common_witness(fam.sets[F], cfg.queries, cfg.g_bound, cfg.x_bound, ambient)
            rep.add(f"C_{F} piecewise syndetic", w is not None,
                    translates=None if w is None else list(w.translates))
    elif fam.kind == CENTRAL:
        table = family_table(fam, ambient, cfg)
        rep.extend(validate_cwps(table, cwps_queries(fam, cfg)), prefix="cwps ")
    elif fam.kind == C_SET:
        for sub in subfamilies(fam, cfg.max_subfamilies):
            inter = Intersection(tuple(fam.sets[F] for F in fam.index if F in sub))
            for i, seqs in enumerate(cfg.families):
                w = j_witness_commutative(inter, seqs, cfg.a_bound, cfg.k_size_bound, ambient)
                rep.add(f"J-set: intersection {sorted(sub)} family {i}", w is not None,
                        witness=None if w is None else {"a": w.a, "K": list(w.K)})
    else:
        raise ValueError(f"unknown family kind {fam.kind!r}")
    return rep

