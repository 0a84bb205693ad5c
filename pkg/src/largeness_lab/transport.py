"""Witness transformers: largeness in ``S`` carried to ``S - S`` and along
homomorphisms ``S -> T``.

Each transformer follows one preservation argument step by step.  The
source-side facts come in through oracles (callables answering witness
queries), so a transformer can be driven by exhaustive searches or by
hand-built answers.  Every transformer re-validates its output in the
target structure and reports the result in a :class:`TransportCertificate`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence as Seq

from . import chains
from .chains import CheckConfig, CwpsTable, DirectedFamily, validate_cwps
from .homs import Hom, image_set
from .largeness import (
    JWitnessCommutative,
    JWitnessGeneral,
    PSWitness,
    Sequence,
    ThickWitness,
    j_witness_commutative,
    j_witness_general,
    ps_common_witness,
    thick_witness,
    validate_j_general,
    validate_ps,
    x_product,
)
from .reports import Report, Unresolved, jsonable
from .semigroups import Ambient, DiffPair, DifferenceGroup, Element
from .sets import Full, Intersection, LargeSet, TranslateUnion


@dataclass
class TransportCertificate:
    theorem: str
    source: dict
    target: object
    report: Report
    trace: dict = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return self.report.ok

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "source": jsonable(self.source),
            "target": jsonable(_witness_dict(self.target)),
            "trace": jsonable(self.trace),
            "validation": self.report.to_dict(),
            "validated": self.valid,
        }


def _witness_dict(w):
    if isinstance(w, ThickWitness):
        return {"shift": w.shift}
    if isinstance(w, PSWitness):
        return {"translates": list(w.translates), "per_query": {str(list(k)): v for k, v in w.per_query.items()}}
    if isinstance(w, JWitnessCommutative):
        return {"a": w.a, "K": list(w.K)}
    if isinstance(w, JWitnessGeneral):
        return {"m": w.m, "a": list(w.a), "t": list(w.t)}
    return w


ThickOracle = Callable[[tuple], "Element | None"]


def default_thick_oracle(A: LargeSet, ambient: Ambient, bound: int = 1000) -> ThickOracle:
    def oracle(G):
        w = thick_witness(A, G, bound, ambient)
        return None if w is None else w.shift
    return oracle


# -- difference group ---------------------------------------------------------


def member(D: DifferenceGroup, A: LargeSet, p: DiffPair) -> bool:
    """``p`` represents an element of ``S`` lying in ``A``."""
    return D.in_base(p) and A.contains(D.to_base(p))


def _pairs(D: DifferenceGroup, F: Iterable) -> list[DiffPair]:
    out = []
    for f in F:
        p = D.lift(f)
        if not any(D.eq(p, q) for q in out):
            out.append(p)
    if not out:
        raise ValueError("finite subset must be nonempty")
    return out


def validate_thick_diff(D: DifferenceGroup, A: LargeSet, F: Iterable, shift: DiffPair) -> Report:
    rep = Report("thick witness in S - S")
    bad = [f for f in _pairs(D, F) if not member(D, A, D.add(f, shift))]
    rep.add("F + shift inside A", not bad, shift=D.normalize(shift), first_violation=bad[0] if bad else None)
    return rep


def thick_to_diffgroup(
    A: LargeSet, F: Iterable, ambient: Ambient, thick_oracle: ThickOracle | None = None, bound: int = 1000
) -> TransportCertificate:
    """Thick in ``S`` gives thick in ``S - S``.

    For ``F = {x_i - y_i}`` put ``G = F + sum(y_i)``, which lies in ``S``;
    thickness in ``S`` gives ``y`` with ``G + y`` inside ``A``, and then
    ``F + (y + sum(y_i))`` is inside ``A``.
    """
    D = DifferenceGroup(ambient)
    oracle = thick_oracle or default_thick_oracle(A, ambient, bound)
    F = _pairs(D, F)
    S = ambient
    ysum = S.sum(f.minus for f in F)
    # x_i + sum_{j != i} y_j, computed inside S without any subtraction
    G = []
    for i, f in enumerate(F):
        g = S.add(f.plus, S.sum(h.minus for j, h in enumerate(F) if j != i))
        if g not in G:
            G.append(g)
    y = oracle(tuple(G))
    if y is None:
        raise Unresolved(f"no thick shift for G={G} within bound")
    shift = DiffPair(S.add(y, ysum), S.zero)
    rep = validate_thick_diff(D, A, F, shift)
    rep.add("shift accounting: G + y inside A", all(A.contains(S.add(g, y)) for g in G), y=y, sum_y=ysum)
    return TransportCertificate(
        "thick-to-difference-group",
        {"set": A, "F": F},
        ThickWitness(shift),
        rep,
        {"sum_minus": ysum, "G": G, "oracle_shift": y},
    )


def validate_ps_diff(D: DifferenceGroup, A: LargeSet, translates: Seq, F: Iterable, x: DiffPair) -> Report:
    rep = Report("piecewise syndetic witness in S - S")
    ts = [D.embed(t) for t in translates]
    bad = [f for f in _pairs(D, F) if not any(member(D, A, D.add(t, D.add(f, x))) for t in ts)]
    rep.add("F + x inside union of translates of A", not bad, translates=list(translates),
            x=D.normalize(x), first_violation=bad[0] if bad else None)
    return rep


def ps_to_diffgroup(
    A: LargeSet,
    translates: Seq[Element],
    F: Iterable,
    ambient: Ambient,
    thick_oracle: ThickOracle | None = None,
    bound: int = 1000,
) -> TransportCertificate:
    """Piecewise syndetic in ``S`` gives piecewise syndetic in ``S - S``: the
    union ``U = U_{t in G} t^{-1}A`` is thick in ``S``, hence in ``S - S``."""
    D = DifferenceGroup(ambient)
    U = TranslateUnion(A, tuple(translates), ambient)
    inner = thick_to_diffgroup(U, F, ambient, thick_oracle or default_thick_oracle(U, ambient, bound), bound)
    F = _pairs(D, F)
    shift = inner.target.shift
    rep = validate_ps_diff(D, A, translates, F, shift)
    rep.extend(inner.report, prefix="union thick: ")
    return TransportCertificate(
        "ps-to-difference-group",
        {"set": A, "translates": list(translates), "F": F},
        PSWitness(tuple(translates), {tuple(D.to_value(f) for f in F): D.to_value(shift)}),
        rep,
        inner.trace,
    )


@dataclass(frozen=True)
class PairSequence:
    """``t -> plus(t) - minus(t)`` with both parts in ``S``."""

    plus: Sequence
    minus: Sequence

    def __call__(self, t: int) -> DiffPair:
        return DiffPair(self.plus(t), self.minus(t))

    @property
    def prefix_len(self) -> int:
        return min(self.plus.prefix_len, self.minus.prefix_len)


def validate_j_diff(D: DifferenceGroup, A: LargeSet, fam: Seq[PairSequence], w: JWitnessCommutative) -> Report:
    rep = Report("J-set witness in S - S")
    a = D.lift(w.a)
    bad = [i for i, f in enumerate(fam) if not member(D, A, D.add(a, D.sum(f(t) for t in w.K)))]
    rep.add("a + sum_K f_i(t) in A for every i", not bad and bool(w.K), first_violation=bad[0] if bad else None)
    return rep


JOracle = Callable[[list], "JWitnessCommutative | None"]


def jset_to_diffgroup(
    A: LargeSet,
    fam: Seq[PairSequence],
    ambient: Ambient,
    j_oracle: JOracle | None = None,
    a_bound: int = 16,
    k_size_bound: int = 3,
) -> TransportCertificate:
    """J-set in ``S`` gives J-set in ``S - S``.

    With ``f_i = a_i - b_i`` put ``g = sum_i b_i`` and ``h_i = f_i + g``
    (in ``S``).  A witness ``(a, K)`` for ``{h_i}`` in ``S`` becomes
    ``(a + b, K)`` with ``b = sum_{t in K} g(t)``.
    """
    if not fam:
        raise ValueError("empty sequence family")
    S, D = ambient, DifferenceGroup(ambient)
    L = min(f.prefix_len for f in fam)

    def g(t):
        return S.sum(f.minus(t) for f in fam)

    hs = [
        Sequence(tuple(S.add(f.plus(t), S.sum(h.minus(t) for j, h in enumerate(fam) if j != i))
                       for t in range(1, L + 1)))
        for i, f in enumerate(fam)
    ]
    oracle = j_oracle or (lambda seqs: j_witness_commutative(A, seqs, a_bound, k_size_bound, S))
    w = oracle(hs)
    if w is None:
        raise Unresolved("no J-witness for the shifted family within bounds")
    b = S.sum(g(t) for t in w.K)
    shifted = DiffPair(S.add(w.a, b), S.zero)
    rep = Report("J-set witness in S - S")
    lhs = [D.add(shifted, D.sum(f(t) for t in w.K)) for f in fam]
    rhs = [D.embed(S.add(w.a, S.sum(h(t) for t in w.K))) for h in hs]
    rep.add("a + b + sum_K f_i(t) == a + sum_K h_i(t)", all(D.eq(l, r) for l, r in zip(lhs, rhs)))
    rep.extend(validate_j_diff(D, A, fam, JWitnessCommutative(shifted, tuple(w.K))))
    return TransportCertificate(
        "jset-to-difference-group",
        {"set": A, "family": [{"plus": f.plus.describe(), "minus": f.minus.describe()} for f in fam]},
        JWitnessCommutative(shifted, tuple(w.K)),
        rep,
        {"oracle_a": w.a, "K": list(w.K), "b": b, "values": [D.normalize(v) for v in lhs]},
    )


def default_theta(D: DifferenceGroup, F: Seq) -> Element:
    """Least ``theta`` in ``S`` (coordinatewise) with ``F + theta`` inside ``S``."""
    S = D.base
    if S.is_group:
        return S.zero
    vals = [D.model.coords(D.to_value(D.lift(f))) for f in F]
    return S.from_coords([max(0, -min(v[c] for v in vals)) for c in range(S.dim)])


def cwps_to_diffgroup(
    table: CwpsTable, theta_chooser: Callable[[DifferenceGroup, tuple], Element] | None = None
) -> CwpsTable:
    """Carry a collectionwise piecewise syndetic table from ``S`` to ``S - S``.

    ``K`` is unchanged; ``y(calH, F) = x(calH, F + theta(F)) + theta(F)``
    where ``theta(F)`` moves ``F`` into ``S``.
    """
    D = DifferenceGroup(table.ambient)
    M = D.model
    choose = theta_chooser or default_theta

    def y(calH, F):
        F = tuple(M.element(D.to_value(D.lift(f))) for f in F)
        theta = choose(D, F)
        moved = tuple(D.to_base(D.from_value(M.add(f, theta))) for f in F)
        x = table.x(calH, moved)
        return None if x is None else M.add(x, theta)

    return CwpsTable(table.family, table.K, y, M)


def _diff_queries(queries: Iterable) -> list[tuple]:
    out = []
    for q in queries:
        q = tuple(q)
        top = max(q)
        out.append(tuple(sorted(set(q) | {v - top for v in q})))
    return out


def _diff_families(families: Iterable, ambient: Ambient) -> list[list[PairSequence]]:
    if ambient.dim != 1:
        return []
    minus = Sequence.linear(1, length=16)
    return [[PairSequence(f, minus) for f in fam] for fam in families]


def family_to_diffgroup(
    fam: DirectedFamily, ambient: Ambient, cfg: CheckConfig | None = None, A: LargeSet | None = None
) -> tuple[DirectedFamily, Report]:
    """Re-check a directed family over ``S - S``.

    The sets are unchanged; the window is widened to negative values and
    condition (2) is established through the transformers above.
    """
    cfg = cfg or CheckConfig()
    D = DifferenceGroup(ambient)
    M = D.model
    lo, hi = cfg.window
    wide = CheckConfig(**{**cfg.__dict__, "window": (lo - (hi - lo), hi)})
    new = DirectedFamily(fam.index, fam.sets, fam.order, fam.kind, None)
    rep = chains.check_structure(new, M, wide, A)
    rep.title = f"directed family ({fam.kind}) in S - S"
    dq = _diff_queries(cfg.queries)
    if fam.kind == chains.QUASI_CENTRAL:
        for F in fam.index:
            w = ps_common_witness(fam.sets[F], cfg.queries, cfg.g_bound, cfg.x_bound, ambient)
            if w is None:
                rep.add(f"C_{F} piecewise syndetic in S", False)
                continue
            for q in dq:
                try:
                    cert = ps_to_diffgroup(fam.sets[F], w.translates, q, ambient, bound=cfg.x_bound * 4)
                    rep.add(f"C_{F} piecewise syndetic in S - S on {list(q)}", cert.valid)
                except Unresolved as exc:
                    rep.add(f"C_{F} piecewise syndetic in S - S on {list(q)}", False, reason=str(exc))
    elif fam.kind == chains.CENTRAL:
        table = cwps_to_diffgroup(chains.family_table(fam, ambient, cfg))
        pos_cfg = CheckConfig(**{**cfg.__dict__, "queries": dq})
        rep.extend(validate_cwps(table, chains.cwps_queries(fam, pos_cfg)), prefix="cwps in S - S ")
    elif fam.kind == chains.C_SET:
        for sub in chains.subfamilies(fam, cfg.max_subfamilies):
            inter = Intersection(tuple(fam.sets[F] for F in fam.index if F in sub))
            for i, pf in enumerate(_diff_families(cfg.families, ambient)):
                name = f"J-set in S - S: intersection {sorted(sub)} family {i}"
                try:
                    cert = jset_to_diffgroup(inter, pf, ambient, a_bound=cfg.a_bound, k_size_bound=cfg.k_size_bound)
                    rep.add(name, cert.valid)
                except Unresolved as exc:
                    rep.add(name, False, reason=str(exc))
    return new, rep


# -- homomorphisms ------------------------------------------------------------


@dataclass
class PSOracle:
    """Fixed translate set plus a shift answer per finite query."""

    translates: tuple
    answer: Callable[[tuple], "Element | None"]

    def __call__(self, F) -> Element | None:
        return self.answer(tuple(F))


def ps_oracle(A: LargeSet, translates: Iterable[Element], ambient: Ambient, x_bound: int = 200) -> PSOracle:
    translates = tuple(translates)
    U = TranslateUnion(A, translates, ambient)

    def answer(F):
        w = thick_witness(U, F, x_bound, ambient)
        return None if w is None else w.shift

    return PSOracle(translates, answer)


def _first_translate(T: Ambient, target: LargeSet, translates: Seq, e: Element):
    for s in translates:
        if target.contains(T.add(s, e)):
            return s
    return None


def _unique(items):
    out = []
    for x in items:
        if x not in out:
            out.append(x)
    return tuple(out)


def ps_under_hom(
    phi: Hom,
    A: LargeSet,
    A_ps: PSOracle,
    phiS_ps: PSOracle,
    F: Iterable[Element],
    window: tuple = (-64, 65),
    preimage_bound: int = 64,
) -> TransportCertificate:
    """``phi(S)`` piecewise syndetic in ``T`` and ``A`` piecewise syndetic in
    ``S`` give ``phi(A)`` piecewise syndetic in ``T``, with translate set
    ``{phi(t) + s : t in H, s in K}``."""
    T = phi.target
    F = _unique(T.element(f) for f in F)
    phiS = image_set(phi, Full(phi.source), window)
    phiA = image_set(phi, A, window)
    z = phiS_ps(F)
    if z is None:
        raise Unresolved(f"no shift placing {list(F)} in the translates of phi(S)")
    choices = {}
    for f in F:
        s = _first_translate(T, phiS, phiS_ps.translates, T.add(f, z))
        if s is None:
            raise Unresolved(f"oracle shift {z} does not cover {f}")
        choices[f] = s
    P = _unique(T.add(s, T.add(f, z)) for f, s in choices.items())
    P_pre = []
    for p in P:
        q = phi.preimage(p, preimage_bound)
        if q is None:
            raise Unresolved(f"no preimage of {p} within bound")
        P_pre.append(q)
    x = A_ps(tuple(_unique(P_pre)))
    if x is None:
        raise Unresolved(f"A-oracle gave no shift for {P_pre}")
    y = phi(x)
    translates = _unique(T.add(phi(t), s) for t in A_ps.translates for s in phiS_ps.translates)
    shift = T.add(z, y)
    rep = validate_ps(phiA, translates, F, shift, T)
    return TransportCertificate(
        "ps-under-homomorphism",
        {"hom": phi.describe(), "set": A, "H": list(A_ps.translates), "K": list(phiS_ps.translates), "F": list(F)},
        PSWitness(translates, {F: shift}),
        rep,
        {"z": z, "s_choices": {str(k): v for k, v in choices.items()}, "P": list(P), "P_preimages": P_pre,
         "x": x, "y": y},
    )


def _image_family(phi: Hom, family: Seq[LargeSet], window: tuple) -> tuple[list, dict]:
    """Images with duplicates merged; ``theta`` maps each image index to the
    least source index mapping onto it."""
    images, theta = [], {}
    for i, A in enumerate(family):
        B = image_set(phi, A, window)
        if B in images:
            continue
        theta[len(images)] = i
        images.append(B)
    return images, theta


def central_under_hom(
    phi: Hom,
    table: CwpsTable,
    phiS_ps: PSOracle,
    window: tuple = (-64, 65),
    preimage_bound: int = 64,
) -> tuple[CwpsTable, dict]:
    """Carry a collectionwise piecewise syndetic table along ``phi``.

    Builds ``kappa(F)`` (shift into the translates of ``phi(S)``),
    ``Psi_F`` (the landed points), preimages ``Psi'_F``, the subfamily
    chooser ``theta``, ``K1(B) = {phi(t) + s}`` and
    ``z(H, F) = kappa(F) + phi(x(theta_H, Psi'_F))``.
    """
    T = phi.target
    phiS = image_set(phi, Full(phi.source), window)
    images, theta_map = _image_family(phi, table.family, window)
    G = phiS_ps.translates
    trace = {"theta": dict(theta_map), "images": images, "G": list(G), "kappa": {}, "Psi": {}}

    def theta(B: frozenset) -> frozenset:
        return frozenset(theta_map[j] for j in B)

    def kappa_psi(F: tuple):
        y = phiS_ps(F)
        if y is None:
            raise Unresolved(f"no shift placing {list(F)} in the translates of phi(S)")
        psi = []
        for f in F:
            s = _first_translate(T, phiS, G, T.add(f, y))
            if s is None:
                raise Unresolved(f"oracle shift {y} does not cover {f}")
            psi.append(T.add(s, T.add(f, y)))
        psi = _unique(psi)
        pre = []
        for p in psi:
            q = phi.preimage(p, preimage_bound)
            if q is None:
                raise Unresolved(f"no preimage of {p} within bound")
            pre.append(q)
        trace["kappa"][str(list(F))] = y
        trace["Psi"][str(list(F))] = list(psi)
        return y, _unique(pre)

    def K1(B: frozenset) -> tuple:
        return _unique(T.add(phi(t), s) for t in table.K(theta(B)) for s in G)

    def z(H: frozenset, F: tuple):
        y, pre = kappa_psi(tuple(F))
        x = table.x(theta(H), pre)
        return None if x is None else T.add(y, phi(x))

    return CwpsTable(tuple(images), K1, z, T), trace


def jset_under_hom(
    phi: Hom,
    A: LargeSet,
    fam: Seq[Sequence],
    depth: int | None = None,
    m_bound: int = 3,
    a_bound: int = 2,
    t_range: int = 4,
    A_oracle: Callable | None = None,
    phiS_oracle: Callable | None = None,
    window: tuple = (-64, 65),
    preimage_bound: int = 64,
) -> TransportCertificate:
    """``phi(S)`` a J-set in ``T`` and ``A`` a J-set in ``S`` give ``phi(A)``
    a J-set in ``T``.

    Repeatedly obtain ``(m_n, a_n, t_n)`` placing every ``f`` in ``phi(S)``,
    each round on the tail ``f(tau + .)`` past the previous indices; the
    resulting value sequences live in ``phi(S)``, where the pushed-forward
    A-witness applies.  The nested product is expanded into one flat witness.
    """
    if not fam:
        raise ValueError("empty sequence family")
    S, T = phi.source, phi.target
    depth = len(fam) + 2 if depth is None else depth
    phiS = image_set(phi, Full(S), window)
    phiA = image_set(phi, A, window)
    phiS_oracle = phiS_oracle or (lambda seqs: j_witness_general(phiS, seqs, m_bound, a_bound, t_range, T))

    if phi.is_identity:
        w = (A_oracle or (lambda seqs: j_witness_general(A, seqs, m_bound, a_bound, t_range, S)))(list(fam))
        if w is None:
            raise Unresolved("no J-witness for the family within bounds")
        rep = validate_j_general(phiA, fam, w, T)
        return TransportCertificate("jset-under-homomorphism", {"hom": phi.describe(), "set": A}, w, rep,
                                    {"collapsed": True})

    blocks, tau = [], 0
    for _ in range(depth):
        tail = [f.shifted(tau, length=t_range) for f in fam]
        w = phiS_oracle(tail)
        if w is None:
            raise Unresolved(f"phi(S) oracle failed on the tail past index {tau}")
        abs_t = tuple(tau + i for i in w.t)
        blocks.append((w.m, tuple(w.a), abs_t))
        tau = max(abs_t)

    values = [Sequence(tuple(x_product(m, a, t, f, T) for m, a, t in blocks)) for f in fam]
    lifted = []
    for v in values:
        pre = [phi.preimage(e, preimage_bound) for e in v.prefix]
        if any(p is None for p in pre):
            raise Unresolved("value sequence left phi(S) within the preimage bound")
        lifted.append(Sequence(tuple(pre)))
    A_oracle = A_oracle or (lambda seqs: j_witness_general(A, seqs, m_bound, a_bound, min(depth, t_range * 2), S))
    wA = A_oracle(lifted)
    if wA is None:
        raise Unresolved("no J-witness for the lifted family within bounds")
    a_T = tuple(phi(e) for e in wA.a)

    b, idx = [a_T[0]], []
    for i, ti in enumerate(wA.t):
        mn, an, tn = blocks[ti - 1]
        b[-1] = T.add(b[-1], an[0])
        for j in range(mn):
            idx.append(tn[j])
            b.append(an[j + 1])
        b[-1] = T.add(b[-1], a_T[i + 1])
    flat = JWitnessGeneral(len(idx), tuple(b), tuple(idx))

    rep = validate_j_general(phiA, fam, flat, T)
    nested = [x_product(wA.m, a_T, wA.t, v, T) for v in values]
    direct = [x_product(flat.m, flat.a, flat.t, f, T) for f in fam]
    rep.add("flat expansion equals nested product", nested == direct, nested=nested, flat=direct)
    rep.add("value sequences inside phi(S)", all(phiS.contains(e) for v in values for e in v.prefix))
    return TransportCertificate(
        "jset-under-homomorphism",
        {"hom": phi.describe(), "set": A, "family": [f.describe() for f in fam]},
        flat,
        rep,
        {"blocks": [{"m": m, "a": list(a), "t": list(t)} for m, a, t in blocks],
         "outer": {"m": wA.m, "a": list(a_T), "t": list(wA.t)}},
    )
