"""Acceptance suite: one function per criterion, each returning a
:class:`Outcome`.  The oracles here are written independently of the code
they check (plain integer scans, direct enumeration of ``G^n``), so a pass
is a genuine cross-check rather than a restatement.

Run from the command line with ``largeness-lab selftest`` or through
``tests/test_acceptance.py``.
"""

from __future__ import annotations

import itertools
import random
import sys
import tempfile
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import numpy as np

from . import certificates as certs
from . import chains
from . import transport as tr
from .chains import CheckConfig, DirectedFamily
from .homs import image_set, parse_hom
from .largeness import (
    NAT,
    Sequence,
    is_thick_exact,
    ps_common_witness,
    syndetic_gap_bound,
    thick_witness,
)
from .rado import (
    BZero,
    FGAbelianGroup,
    brute_force_pr,
    coloring_is_avoiding,
    decide_partition_regular,
    diagonal_subgroup,
    separating_character,
)
from .semigroups import Ambient, DiffPair
from .sets import EventuallyPeriodic, Full

DEFAULT_SEED = 20240917
Z = Ambient.integers()
N2 = Ambient.naturals(2)


@dataclass
class Outcome:
    number: int
    title: str
    ok: bool
    detail: str
    seconds: float = 0.0
    extra: dict = field(default_factory=dict)

    def line(self) -> str:
        return (f"[{'PASS' if self.ok else 'FAIL'}] criterion {self.number}: {self.title} "
                f"({self.detail}; {self.seconds:.2f}s)")

    def to_dict(self) -> dict:
        return {"criterion": self.number, "title": self.title, "ok": self.ok, "detail": self.detail,
                "seconds": round(self.seconds, 3)}


def _timed(number: int, title: str, limit: float | None):
    def wrap(fn):
        def run(seed: int = DEFAULT_SEED) -> Outcome:
            t0 = time.perf_counter()
            ok, detail = fn(seed)
            dt = time.perf_counter() - t0
            if limit is not None and dt >= limit:
                ok, detail = False, f"{detail}; exceeded the {limit:g}s budget"
            return Outcome(number, title, ok, detail, dt)
        run.number = number
        run.title = title
        run.limit = limit
        return run
    return wrap


# -- 1 ------------------------------------------------------------------------


@_timed(1, "2N is syndetic in N (gap 2) but not in Z", 1.0)
def criterion_1(seed):
    evens = EventuallyPeriodic("10")
    gN, gZ = syndetic_gap_bound(evens, NAT), syndetic_gap_bound(evens, Z)
    return gN == 2 and gZ is None, f"gap over N = {gN}, over Z = {gZ}"


# -- 2 ------------------------------------------------------------------------

SCAN_HI = 10**4


def _scan_mask(pattern: str, offset: int, added: frozenset, removed: frozenset) -> np.ndarray:
    """Membership on ``[0, SCAN_HI + 51)`` built from the definition directly."""
    n = SCAN_HI + 51
    bits = np.array([c == "1" for c in pattern], dtype=bool)
    reps = n // len(pattern) + 2
    m = np.zeros(n, dtype=bool)
    if offset < n:
        m[offset:] = np.tile(bits, reps)[: n - offset]
    for x in removed:
        m[x] = False
    for x in added:
        m[x] = True
    return m


def _scan_thick(m: np.ndarray) -> bool:
    # some window [x, x + 50] with x <= 10^4 lies inside A
    c = np.concatenate([[0], np.cumsum(m)])
    runs = c[51:] - c[:-51]
    return bool((runs[: SCAN_HI + 1] == 51).any())


def _scan_gap(m: np.ndarray) -> int | None:
    """1 + longest run of non-members starting in ``[0, SCAN_HI)`` that ends
    before the scan does; ``None`` when the scan ends inside a gap."""
    longest, run = 0, 0
    for v in m[:SCAN_HI].tolist():
        if v:
            longest, run = max(longest, run), 0
        else:
            run += 1
    if run and not m[SCAN_HI:].any():
        return None
    return max(longest, run) + 1


def _c2_sets(rng: random.Random):
    for p in range(1, 13):
        for k in range(2**p):
            yield format(k, f"0{p}b"), 0, frozenset(), frozenset()
    for _ in range(400):
        p = rng.randint(1, 12)
        pattern = "".join(rng.choice("01") for _ in range(p))
        offset = rng.randint(0, 40)
        added = frozenset(rng.sample(range(60), rng.randint(0, 3)))
        removed = frozenset(rng.sample(range(60), rng.randint(0, 3)))
        yield pattern, offset, added, removed


@_timed(2, "exact thick/syndetic deciders agree with window scans", 30.0)
def criterion_2(seed):
    rng = random.Random(seed + 2)
    n_sets, bad = 0, []
    for pattern, offset, added, removed in _c2_sets(rng):
        A = EventuallyPeriodic(pattern, offset, added, removed)
        m = _scan_mask(pattern, offset, added, removed - added)
        exact = is_thick_exact(A)
        found = thick_witness(A, range(51), SCAN_HI, NAT) is not None
        scan = _scan_thick(m)
        g, gs = syndetic_gap_bound(A, NAT), _scan_gap(m)
        n_sets += 1
        if not (exact == found == scan and g == gs):
            bad.append((pattern, offset, sorted(added), sorted(removed), exact, found, scan, g, gs))
    return not bad, f"{n_sets} sets, {len(bad)} disagreements" + (f", first {bad[0]}" if bad else "")


# -- 3 and 4 --------------------------------------------------------------------


def _pattern(rng, pmax=6) -> str:
    while True:
        p = "".join(rng.choice("01") for _ in range(rng.randint(1, pmax)))
        if "1" in p:
            return p


def _gen_thick(rng):
    kind = rng.choice(["N", "N", "Z", "N2"])
    if kind == "N2":
        S = N2
        F = [DiffPair(tuple(rng.randint(0, 6) for _ in range(2)), tuple(rng.randint(0, 6) for _ in range(2)))
             for _ in range(rng.randint(1, 4))]
        return Full(S), F, S
    S = NAT if kind == "N" else Z
    k = rng.randint(0, 15)
    removed = frozenset(rng.sample(range(k, k + 20), rng.randint(0, 3)))
    A = EventuallyPeriodic("1", offset=k, removed=removed)
    F = [DiffPair(rng.randint(0, 15), rng.randint(0, 15)) for _ in range(rng.randint(1, 4))]
    return A, F, S


def _chain(rng, kind):
    k = rng.randint(1, 4)
    base = rng.randint(0, 2)
    sets = {F: EventuallyPeriodic("1" + "0" * (k - 1), offset=k * (base + F)) for F in range(1, rng.randint(2, 4))}
    A = EventuallyPeriodic("1" + "0" * (k - 1), offset=k * base)
    return DirectedFamily.chain(sets, kind=kind), A


def _pair_family(rng):
    return [tr.PairSequence(Sequence.linear(rng.randint(0, 3), rng.randint(0, 3)),
                            Sequence.linear(rng.randint(0, 3), rng.randint(0, 3)))
            for _ in range(rng.randint(1, 2))]


def _jset_set(rng):
    return rng.choice([EventuallyPeriodic("1" + "0" * (rng.randint(1, 3) - 1)), EventuallyPeriodic("1", rng.randint(0, 10))])


HOMS = [("scale:1", NAT), ("scale:2", NAT), ("scale:3", NAT), ("scale:2", Z), ("mod:2", Z), ("mod:3", Z),
        ("mod:4", Z), ("mod:5", Z), ("mod:6", Z), ("scale:2;mod:6", Z)]


def _source_set(rng, S):
    p = _pattern(rng)
    if S.kind == "Z":
        return EventuallyPeriodic(p, rng.randint(0, 5), two_sided=True)
    return EventuallyPeriodic(p, rng.randint(0, 6))


def _target_query(rng, T):
    if T.is_finite:
        return tuple(sorted(rng.sample(range(T.order), rng.randint(1, T.order))))
    return tuple(sorted(rng.sample(range(0, 13), rng.randint(1, 5))))


def _target_family(rng, T):
    fams = []
    for _ in range(rng.randint(1, 2)):
        if rng.random() < 0.5:
            c = rng.randint(0, 5)
            fams.append(Sequence.constant(c % T.order if T.is_finite else c, 12))
        else:
            s, i = rng.randint(0, 3), rng.randint(0, 3)
            fams.append(Sequence.from_function(lambda t, s=s, i=i: (i + s * t) % T.order if T.is_finite else i + s * t,
                                               12))
    return fams


def _run_diff(name, rng):
    if name == "thick":
        A, F, S = _gen_thick(rng)
        return tr.thick_to_diffgroup(A, F, S).report
    if name == "ps":
        A = EventuallyPeriodic(_pattern(rng), rng.randint(0, 10))
        G = tuple(range(syndetic_gap_bound(A, NAT)))
        F = rng.sample(range(-10, 11), rng.randint(1, 5))
        return tr.ps_to_diffgroup(A, G, F, NAT).report
    if name == "jset":
        return tr.jset_to_diffgroup(_jset_set(rng), _pair_family(rng), NAT).report
    kind = {"quasi-central": chains.QUASI_CENTRAL, "central": chains.CENTRAL, "c-set": chains.C_SET}[name]
    fam, A = _chain(rng, kind)
    cfg = CheckConfig(a_bound=24)
    src = chains.check_directed_family(fam, NAT, cfg, A)
    if not src.ok:
        raise AssertionError(f"generated family fails in S: {src}")
    return tr.family_to_diffgroup(fam, NAT, cfg, A)[1]


def _run_hom(name, rng):
    text, S = rng.choice(HOMS)
    phi = parse_hom(text, S)
    T = phi.target
    phiS = image_set(phi, Full(S))
    if name == "jset":
        A = rng.choice([Full(S), EventuallyPeriodic("10", two_sided=S.kind == "Z")])
        return tr.jset_under_hom(phi, A, _target_family(rng, T), m_bound=3, a_bound=2, t_range=6).report
    A = _source_set(rng, S)
    F = _target_query(rng, T)
    K = ps_common_witness(phiS, [F], 4, 200, T).translates
    if name == "ps":
        H = tuple(range(syndetic_gap_bound(A, S)))
        return tr.ps_under_hom(phi, A, tr.ps_oracle(A, H, S), tr.ps_oracle(phiS, K, T), F).report
    # a nested second member keeps every finite intersection large
    sub = EventuallyPeriodic(A.pattern, A.offset + A.period * rng.randint(1, 3),
                             removed=frozenset(rng.sample(range(20), 2)), two_sided=A.two_sided)
    members = [A] if rng.random() < 0.5 else [A, sub]
    table = chains.search_cwps_table(members, [(0, 1, 2, 3)], 6, 120, S)
    idx = DirectedFamily.chain({i: None for i in range(len(members))})
    src = chains.validate_cwps(table, chains.cwps_queries(idx, CheckConfig()))
    if not src.ok:
        raise AssertionError(f"generated table fails in S: {src}")
    new, _ = tr.central_under_hom(phi, table, tr.ps_oracle(phiS, K, T))
    fam = DirectedFamily.chain({i: None for i in range(len(new.family))})
    return chains.validate_cwps(new, chains.cwps_queries(fam, CheckConfig(queries=[F])))


DIFF_TRANSFORMERS = ("thick", "ps", "quasi-central", "central", "jset", "c-set")
HOM_TRANSFORMERS = ("ps", "central", "jset")
PER_TRANSFORMER = 20


@_timed(3, "transport soundness: 6 difference-group and 3 homomorphism transformers", 120.0)
def criterion_3(seed):
    counts, failures = {}, []
    for group, names, runner in (("S-S", DIFF_TRANSFORMERS, _run_diff), ("hom", HOM_TRANSFORMERS, _run_hom)):
        for name in names:
            rng = random.Random(f"{seed}:{group}:{name}")
            ok = 0
            for i in range(PER_TRANSFORMER):
                try:
                    rep = runner(name, rng)
                    if rep.ok:
                        ok += 1
                    else:
                        failures.append((group, name, i, [c.name for c in rep.failures()]))
                except Exception as exc:  # an unresolved search is a failure here too
                    failures.append((group, name, i, f"{type(exc).__name__}: {exc}"))
            counts[f"{group}/{name}"] = ok
    detail = ", ".join(f"{k} {v}/{PER_TRANSFORMER}" for k, v in counts.items())
    return not failures, detail + (f"; first failure {failures[0]}" if failures else "")


@_timed(4, "J-set transport identity a+b+sum f_i = a+sum h_i", None)
def criterion_4(seed):
    rng = random.Random(f"{seed}:identity")
    checked, bad = 0, []
    for i in range(100):
        fam = _pair_family(rng)
        cert = tr.jset_to_diffgroup(_jset_set(rng), fam, NAT)
        a, K, b = cert.trace["oracle_a"], cert.trace["K"], cert.trace["b"]
        for idx, f in enumerate(fam):
            lhs = a + b + sum(f.plus(t) - f.minus(t) for t in K)
            h = [f.plus(t) + sum(g.minus(t) for j, g in enumerate(fam) if j != idx) for t in K]
            rhs = a + sum(h)
            checked += 1
            if lhs != rhs:
                bad.append((i, idx, lhs, rhs))
        if not cert.report.checks[0].ok:
            bad.append((i, "report"))
    return not bad, f"{checked} identities on 100 instances, {len(bad)} mismatches"


# -- 5 and 7 ----------------------------------------------------------------------


def _c5_instances():
    vals = range(-2, 3)
    for m in (2, 3, 4, 5):
        for k in (1, 2):
            for A in itertools.product(itertools.product(vals, repeat=2), repeat=k):
                for b in itertools.product(vals, repeat=k):
                    if any(b):
                        yield m, A, b


@lru_cache(maxsize=None)
def _c5_decide(m: int, A: tuple, b: tuple):
    G = FGAbelianGroup(0, (m,))
    try:
        return decide_partition_regular(A, b, G)
    except BZero:
        return None


def _reduced(m, A, b):
    return m, tuple(tuple(v % m for v in r) for r in A), tuple(v % m for v in b)


@_timed(5, "Rado verdicts agree with brute force over Z_2..Z_5", 300.0)
def criterion_5(seed):
    n_inst, skipped, reg, nonreg, bad = 0, 0, 0, 0, []
    seen = {}
    for m, A, b in _c5_instances():
        n_inst += 1
        key = _reduced(m, A, b)
        if key in seen:
            if not seen[key]:
                bad.append((m, A, b))
            continue
        v = _c5_decide(*key)
        G = FGAbelianGroup(0, (m,))
        if v is None:
            skipped += 1
            seen[key] = True
            continue
        if v.regular:
            reg += 1
            ok = all(brute_force_pr(key[1], key[2], G, r) for r in (1, 2, 3))
        else:
            nonreg += 1
            ok = (v.verification.ok and v.verification.checks[0].detail["violations"] == 0
                  and coloring_is_avoiding(key[1], key[2], G, v.coloring.table))
        seen[key] = ok
        if not ok:
            bad.append((m, A, b))
    return not bad, (f"{n_inst} instances, {len(seen)} distinct after reduction: {reg} regular, "
                     f"{nonreg} not regular, {skipped} with b = 0 mod m skipped; {len(bad)} disagreements")


@_timed(7, "contradiction inequality on every non-regular finite instance", None)
def criterion_7(seed):
    checked, cands, bad, seen = 0, 0, [], set()
    for m, A, b in _c5_instances():
        key = _reduced(m, A, b)
        if key in seen:
            continue
        seen.add(key)
        m, A, b = key
        v = _c5_decide(*key)
        if v is None or v.regular:
            continue
        G = FGAbelianGroup(0, (m,))
        phi, d = v.phi, v.coloring.d
        n = len(A[0])
        k = len(A)
        # phases computed from scratch: phi(c_i(t)) with c_i(t) = column i times t
        def phase(i, t):
            vec = [[(A[r][i] * t[0]) % m] for r in range(k)]
            return sum((c * x for c, x in zip(phi.coeffs, itertools.chain(*vec))), Fraction(0)) % 1
        phib = sum((c * (x % m) for c, x in zip(phi.coeffs, b)), Fraction(0)) % 1
        bound = Fraction(n, d)
        ok = bound < min(phib, 1 - phib)
        colors = {t: tuple(int(phase(i, t) * d) for i in range(n)) for t in G.elements()}
        classes = {}
        for t, c in colors.items():
            classes.setdefault(c, []).append(t)
        for cls in classes.values():
            for x in itertools.product(cls, repeat=n):
                s = sum(phase(i, x[i]) - phase(i, x[0]) for i in range(n))
                cands += 1
                ok &= abs(s) < bound
        checked += 1
        if not ok:
            bad.append(key)
    return not bad, f"{checked} non-regular instances, {cands} monochromatic candidates, {len(bad)} violations"


# -- 6 ----------------------------------------------------------------------------


def _random_group(rng) -> FGAbelianGroup:
    while True:
        free = rng.randint(0, 2)
        tors = tuple(rng.randint(2, 9) for _ in range(rng.randint(0, 2)))
        if free + len(tors):
            return FGAbelianGroup(free, tors)


@_timed(6, "separating characters exact on 200 random instances", None)
def criterion_6(seed):
    rng = random.Random(f"{seed}:characters")
    done, attempts, bad = 0, 0, []
    while done < 200:
        attempts += 1
        G = _random_group(rng)
        k, n = rng.randint(1, 3), rng.randint(1, 3)
        A = tuple(tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(k))
        b = tuple(tuple(rng.randint(-4, 4) for _ in range(G.dim)) for _ in range(k))
        b = tuple(G.element(e) for e in b)
        H = diagonal_subgroup(A, G)
        if H.contains(b) or not any(any(e) for e in b):
            continue
        phi = separating_character(H, b, G)
        mods = list(G.moduli) * k
        s = [sum(r) for r in A]
        # generators of H built directly: row sums times each coordinate generator
        gens = [[s[r] * int(c == j) for r in range(k) for c in range(G.dim)] for j in range(G.dim)]

        def ev(vec):
            return sum((c * v for c, v in zip(phi.coeffs, vec)), Fraction(0)) % 1

        flat_b = [x for e in b for x in e]
        ok = all(ev(g) == 0 for g in gens) and ev(flat_b) != 0
        ok &= all(m == 0 or (c * m).denominator == 1 for c, m in zip(phi.coeffs, mods))
        done += 1
        if not ok:
            bad.append((str(G), A, b))
    return not bad, f"200 instances ({attempts} drawn), {len(bad)} failures"


# -- 8 ----------------------------------------------------------------------------


@_timed(8, "Z window [-1000, 1000] corroboration for x1 - x2 = 1", 1.0)
def criterion_8(seed):
    G = FGAbelianGroup(1, ())
    v = decide_partition_regular([[1, -1]], [1], G, window=1000)
    col = v.coloring
    pairs = [((x2 + 1,), (x2,)) for x2 in range(-1000, 1000)]
    mono = sum(col.color_of(x1) == col.color_of(x2) for x1, x2 in pairs)
    ok = not v.regular and v.verification.ok and mono == 0
    return ok, f"d = {col.d}, {len(pairs)} solution pairs scanned, {mono} monochromatic"


# -- 9 ----------------------------------------------------------------------------

CERT_CORPUS = [
    ("rado", dict(group="Z_5", matrix=[[1, -1]], b=[1])),
    ("rado", dict(group="Z_4", matrix=[[1, 1], [2, -1]], b=[1, 2])),
    ("rado", dict(group="Z_4xZ_6", matrix=[[1, -1], [2, 1]], b=[[1, 0], [0, 3]])),
    ("rado", dict(group="Z", matrix=[[1, -1]], b=[1], window=40)),
    ("rado", dict(group="Z", matrix=[[1, 1]], b=[2])),
    ("rado", dict(group="Z_5", matrix=[[2]], b=[3])),
    ("largeness", dict(command="check", notion="syndetic", ambient="N", set="periodic:offset=0,pattern=10")),
    ("largeness", dict(command="check", notion="syndetic", ambient="Z", set="periodic:offset=0,pattern=10")),
    ("largeness", dict(command="check", notion="thick", ambient="N", set="cofinite:from=7")),
    ("largeness", dict(command="check", notion="central", ambient="N", set="evens",
                       members=["periodic:offset=2,pattern=10", "periodic:offset=4,pattern=10"])),
    ("largeness", dict(command="witness", notion="thick", ambient="Z", set="cofinite:from=10", query="-2,5")),
    ("largeness", dict(command="witness", notion="ps", ambient="N", set="evens", query="0..3")),
    ("largeness", dict(command="witness", notion="jset", ambient="N", set="evens", family="const:0;const:1")),
    ("largeness", dict(command="witness", notion="jset-general", ambient="N", set="evens", family="const:1")),
    ("largeness", dict(command="witness", notion="cwps", ambient="N", set="evens",
                       members=["evens", "periodic:pattern=1000"], query="0..20")),
    ("transport", dict(mode="diff-group", notion="thick", ambient="N", set="cofinite:from=10", query="-2,5")),
    ("transport", dict(mode="diff-group", notion="thick", ambient="N^2", set="all", query="1,-1")),
    ("transport", dict(mode="diff-group", notion="ps", ambient="N", set="periodic:pattern=1000", query="-5..5",
                       translates="0,1,2,3")),
    ("transport", dict(mode="diff-group", notion="jset", ambient="N", set="evens", family="linear:1/linear:2")),
    ("transport", dict(mode="diff-group", notion="quasi-central", ambient="N", set="evens",
                       members=["periodic:offset=2,pattern=10", "periodic:offset=4,pattern=10"])),
    ("transport", dict(mode="diff-group", notion="central", ambient="N", set="evens",
                       members=["periodic:offset=2,pattern=10", "periodic:offset=4,pattern=10"])),
    ("transport", dict(mode="diff-group", notion="c-set", ambient="N", set="evens",
                       members=["periodic:offset=2,pattern=10"])),
    ("transport", dict(mode="hom", phi="scale:2", notion="ps", ambient="N", set="all", query="0..10")),
    ("transport", dict(mode="hom", phi="mod:6", notion="ps", ambient="Z", set="periodic:pattern=10,two_sided=1",
                       query="0..5")),
    ("transport", dict(mode="hom", phi="scale:2", notion="central", ambient="N", set="all", query="0..12")),
    ("transport", dict(mode="hom", phi="mod:6", notion="central", ambient="Z", set="periodic:pattern=10,two_sided=1",
                       query="0..5")),
    ("transport", dict(mode="hom", phi="scale:2", notion="jset", ambient="N", set="all", family="const:1")),
    ("transport", dict(mode="hom", phi="mod:6", notion="jset", ambient="Z", set="all", family="linear:1",
                       bounds={"depth": 3})),
]

EMIT = {"largeness": certs.emit_largeness, "transport": certs.emit_transport, "rado": certs.emit_rado}


def _verifies(text: str) -> bool:
    try:
        return certs.verify_text(text).ok
    except certs.SchemaError:
        return False


def _mutate(text: str, rng: random.Random) -> str:
    i = rng.randrange(len(text))
    c = text[i]
    if c.isdigit():
        new = str((int(c) + rng.randint(1, 9)) % 10)
    elif c.isalpha():
        new = "q" if c != "q" else "r"
    else:
        new = "#" if c != "#" else "!"
    return text[:i] + new + text[i + 1:]


def flip_color(payload: dict) -> tuple[dict, list]:
    """Recolor one element with its neighbour's color so that the solution
    through both becomes monochromatic; the payload is resealed."""
    colors = [dict(e) for e in payload["colors"]]
    colors[1] = {"t": colors[1]["t"], "color": list(colors[0]["color"])}
    fields = {k: v for k, v in payload.items() if k not in ("digest", "schema_version", "kind")}
    fields["colors"] = colors
    return certs.seal(payload["kind"], fields), colors[1]["t"]


@_timed(9, "certificates re-verify from file; single-byte mutations fail", None)
def criterion_9(seed):
    rng = random.Random(f"{seed}:mutations")
    emitted, reverified, mutated_caught, n_mut = 0, 0, 0, 0
    problems = []
    with tempfile.TemporaryDirectory() as tmp:
        for i, (kind, inst) in enumerate(CERT_CORPUS):
            payload = EMIT[kind](inst)
            path = Path(tmp) / f"cert{i}.json"
            certs.write(payload, path)
            emitted += 1
            text = path.read_text(encoding="utf-8")
            if payload["validated"] and _verifies(text):
                reverified += 1
            else:
                problems.append(f"cert {i} ({kind}) did not re-verify")
            for _ in range(5):
                n_mut += 1
                if not _verifies(_mutate(text, rng)):
                    mutated_caught += 1
                else:
                    problems.append(f"cert {i}: mutation accepted")
        flipped, _ = flip_color(certs.emit_rado(dict(group="Z_5", matrix=[[1, -1]], b=[1])))
        rep = certs.verify_text(certs.canonical(flipped))
        viol = next((c.detail.get("violation") for c in rep.checks if c.name == "zero monochromatic solutions"), None)
        flip_ok = not rep.ok and viol is not None
        if not flip_ok:
            problems.append("flipped color not detected with a violating x")
    ok = not problems and emitted == reverified and mutated_caught == n_mut
    return ok, (f"{reverified}/{emitted} certificates re-verified, {mutated_caught}/{n_mut} single-byte "
                f"mutations rejected, flipped color caught with violation x = {viol}"
                + (f"; {problems[0]}" if problems else ""))


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
            criterion_8, criterion_9]


def run_all(seed: int = DEFAULT_SEED, only=None, stream=None) -> list[Outcome]:
    stream = stream or sys.stdout
    out = []
    for crit in CRITERIA:
        if only and crit.number not in only:
            continue
        res = crit(seed)
        stream.write(res.line() + "\n")
        stream.flush()
        out.append(res)
    return out


__all__ = ["Outcome", "CRITERIA", "run_all", "flip_color"]
