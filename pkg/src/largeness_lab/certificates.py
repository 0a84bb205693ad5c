"""Certificates: emit a result as canonical JSON and re-validate it later.

A certificate is a flat JSON object holding the instance (as the same text
the command line accepts), the result, and the validation report that was
produced for it.  ``verify`` parses the instance again, re-runs the
validator on the *stored* result, and requires the fresh report to equal
the stored one.  The file must also be byte-canonical (sorted keys, two
space indent) and carry a matching sha256 digest, so any single-byte edit
is detected even when it happens to keep the JSON meaningful.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from pathlib import Path

from . import chains
from .chains import CheckConfig, CwpsTable, DirectedFamily, search_cwps_table, validate_cwps
from .dsl import parse_family, parse_pair_family, parse_query
from .homs import image_set, parse_hom
from .largeness import (
    JWitnessCommutative,
    JWitnessGeneral,
    is_thick_exact,
    j_witness_commutative,
    j_witness_general,
    ps_common_witness,
    syndetic_gap_bound,
    thick_witness,
    validate_j_commutative,
    validate_j_general,
    validate_ps,
    validate_thick,
    _finite,
)
from .rado import (
    Character,
    Coloring,
    FGAbelianGroup,
    _matrix,
    _vector,
    apply,
    circle_dist,
    decide_partition_regular,
    diagonal_subgroup,
    verify_no_mono_solution,
)
from .reports import Report, Unresolved, jsonable
from .semigroups import CYCLIC, INTEGERS, Ambient, DifferenceGroup
from .sets import EventuallyPeriodic, Full, parse_set
from . import transport as tr

SCHEMA_VERSION = 1
KINDS = ("largeness", "transport", "rado")


class SchemaError(ValueError):
    pass


# -- encoding -----------------------------------------------------------------


def canonical(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def digest(payload: dict) -> str:
    body = {k: v for k, v in payload.items() if k != "digest"}
    return hashlib.sha256(json.dumps(body, sort_keys=True, separators=(",", ":")).encode()).hexdigest()


def seal(kind: str, fields: dict) -> dict:
    payload = {"schema_version": SCHEMA_VERSION, "kind": kind, **jsonable(fields)}
    payload["digest"] = digest(payload)
    return payload


def write(payload: dict, path: str | Path) -> None:
    Path(path).write_text(canonical(payload), encoding="utf-8")


REQUIRED = {
    "largeness": ("command", "notion", "ambient", "set", "validation", "validated"),
    "transport": ("mode", "notion", "ambient", "set", "target", "validation", "validated"),
    "rado": ("group", "matrix", "b", "verdict", "verification", "validation"),
}


def load(text: str) -> dict:
    if not text.strip():
        raise SchemaError("empty certificate")
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not JSON: {exc.msg} at line {exc.lineno} column {exc.colno}") from None
    if not isinstance(payload, dict):
        raise SchemaError("certificate must be a JSON object")
    version = payload.get("schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaError(f"schema version {version!r} is not {SCHEMA_VERSION}")
    kind = payload.get("kind")
    if kind not in KINDS:
        raise SchemaError(f"unknown certificate kind {kind!r}")
    missing = [k for k in REQUIRED[kind] if k not in payload]
    if missing:
        raise SchemaError(f"missing field(s) {missing} for kind {kind!r}")
    return payload


def verify_text(text: str) -> Report:
    """Full check of a serialized certificate.  Raises :class:`SchemaError`
    when the text is not a certificate at all."""
    payload = load(text)
    kind = payload["kind"]
    rep = Report(f"{kind} certificate")
    rep.add("canonical encoding", text == canonical(payload))
    rep.add("digest matches", payload.get("digest") == digest(payload))
    try:
        if kind == "rado":
            fresh, summary = rado_validate(payload)
            rep.add("verification summary reproduced", jsonable(summary) == payload["verification"],
                    fresh=summary)
        else:
            fresh = (largeness_validate if kind == "largeness" else transport_validate)(payload)
        rep.add("validation report reproduced", jsonable(fresh.to_dict()) == payload["validation"])
        rep.extend(fresh)
        if kind == "transport":
            rep.extend(_transport_rerun(payload))
    except (ValueError, KeyError, TypeError, IndexError, Unresolved) as exc:
        rep.add("instance re-validates", False, error=f"{type(exc).__name__}: {exc}")
    return rep


def verify_file(path: str | Path) -> Report:
    return verify_text(Path(path).read_text(encoding="utf-8"))


def _el(v):
    return tuple(v) if isinstance(v, list) else v


# -- largeness ------------------------------------------------------------------

CHECK_NOTIONS = ("thick", "syndetic", chains.QUASI_CENTRAL, chains.CENTRAL, chains.C_SET)
WITNESS_NOTIONS = ("thick", "ps", "jset", "jset-general", "cwps")

LARGENESS_DEFAULTS = {
    "bound": 1000, "g_bound": 4, "x_bound": 200, "a_bound": 8, "k_size_bound": 3,
    "m_bound": 3, "t_range": 6, "window": 60,
}


def _notion(n: str) -> str:
    return n.replace("-", "_") if n in ("quasi-central", "c-set") else n


def _family(inst: dict, S: Ambient, kind: str) -> DirectedFamily:
    members = inst.get("members") or [inst["set"]]
    return DirectedFamily.chain({i + 1: parse_set(m, S) for i, m in enumerate(members)}, kind=kind)


def _cfg(inst: dict, S: Ambient) -> CheckConfig:
    bd = {**LARGENESS_DEFAULTS, **(inst.get("bounds") or {})}
    q = parse_query(inst.get("query") or "0,1,2,3", S)
    return CheckConfig(window=(0, bd["window"]), queries=[q], g_bound=bd["g_bound"], x_bound=bd["x_bound"],
                       a_bound=bd["a_bound"], k_size_bound=bd["k_size_bound"])


def _largeness_subfamily_queries(n_members: int, F: tuple) -> list:
    fam = DirectedFamily.chain({i: None for i in range(n_members)})
    return chains.cwps_queries(fam, CheckConfig(queries=[F]))


def largeness_result(inst: dict) -> dict:
    """Run the command described by ``inst``; raises :class:`Unresolved`
    when a bounded search finds nothing."""
    S = Ambient.parse(inst["ambient"])
    A = parse_set(inst["set"], S)
    bd = {**LARGENESS_DEFAULTS, **(inst.get("bounds") or {})}
    notion = _notion(inst["notion"])
    if inst["command"] == "check":
        if notion == "thick":
            return {"value": is_thick_exact(A)}
        if notion == "syndetic":
            return {"value": syndetic_gap_bound(A, S)}
        if notion in (chains.QUASI_CENTRAL, chains.CENTRAL, chains.C_SET):
            return {"value": None}
        raise ValueError(f"unknown check notion {inst['notion']!r}")
    L = inst.get("length") or 8
    if notion == "thick":
        F = _finite(parse_query(inst["query"], S), S)
        w = thick_witness(A, F, bd["bound"], S)
        if w is None:
            raise Unresolved(f"no shift up to {bd['bound']} puts F inside A")
        return {"witness": {"shift": w.shift}}
    if notion == "ps":
        F = _finite(parse_query(inst["query"], S), S)
        w = ps_common_witness(A, [F], bd["g_bound"], bd["x_bound"], S)
        if w is None:
            raise Unresolved("no translate set within the bounds")
        return {"witness": {"translates": list(w.translates), "x": w.per_query[F]}}
    if notion == "jset":
        fam = parse_family(inst["family"], S, L)
        w = j_witness_commutative(A, fam, bd["a_bound"], bd["k_size_bound"], S)
        if w is None:
            raise Unresolved("no (a, K) within the bounds")
        return {"witness": {"a": w.a, "K": list(w.K)}}
    if notion == "jset-general":
        fam = parse_family(inst["family"], S, L)
        w = j_witness_general(A, fam, bd["m_bound"], bd["a_bound"], bd["t_range"], S)
        if w is None:
            raise Unresolved("no (m, a, t) within the bounds")
        return {"witness": {"m": w.m, "a": list(w.a), "t": list(w.t)}}
    if notion == "cwps":
        members = [parse_set(m, S) for m in (inst.get("members") or [inst["set"]])]
        F = _finite(parse_query(inst["query"], S), S)
        table = search_cwps_table(members, [F], bd["g_bound"], bd["x_bound"], S)
        queries = _largeness_subfamily_queries(len(members), F)
        return {"witness": table.tabulate(queries)}
    raise ValueError(f"unknown witness notion {inst['notion']!r}")


def _stored_table(family, stored: dict, ambient: Ambient) -> CwpsTable:
    Ks, xs = stored["K"], stored["x"]

    def K(calF):
        return tuple(_el(v) for v in Ks[chains._key(calF)])

    def x(calH, F):
        v = xs.get(f"{chains._key(calH)}|{list(F)}")
        return _el(v)

    return CwpsTable(tuple(family), K, x, ambient)


def _gap_corroboration(A, S: Ambient, g, rep: Report) -> None:
    if not isinstance(A, EventuallyPeriodic) or S.kind == CYCLIC or S.dim != 1:
        rep.add("window corroboration", True, skipped="only for eventually periodic sets on N or Z")
        return
    P = A.period
    a, b = A.exception_span
    lo = a - 3 * P if S.kind == INTEGERS else 0
    hi = max(b, lo) + 3 * P
    if g is None:
        far = range(hi, hi + 3 * P) if "1" not in A.pattern else range(a - 1000, a)
        rep.add("window corroboration: a gap reaches past the window", not any(A.contains(n) for n in far),
                window=[far.start, far.stop])
        return
    meets = all(any(A.contains(n) for n in range(s, s + g)) for s in range(lo, hi))
    tight = g == 1 or any(not any(A.contains(n) for n in range(s, s + g - 1)) for s in range(lo, hi + g))
    rep.add("window corroboration: every length-g interval meets A, some length g-1 one does not",
            meets and tight, window=[lo, hi])


def largeness_validate(p: dict) -> Report:
    S = Ambient.parse(p["ambient"])
    A = parse_set(p["set"], S)
    notion = _notion(p["notion"])
    if p["command"] == "check":
        if notion == "thick":
            rep = Report("thickness (exact)")
            exact = is_thick_exact(A)
            rep.add("stored value matches the exact decision", p.get("value") == exact, value=exact)
            if isinstance(A, (EventuallyPeriodic, Full)) and S.dim == 1 and S.kind != CYCLIC:
                found = thick_witness(A, range(51), 10**4, S) is not None
                rep.add("window corroboration: [0..50] fits below 10^4", found == exact, found=found)
            return rep
        if notion == "syndetic":
            rep = Report("syndetic gap bound (exact)")
            g = syndetic_gap_bound(A, S)
            rep.add("stored value matches the exact gap bound", p.get("value") == g, value=g)
            _gap_corroboration(A, S, g, rep)
            return rep
        rep = chains.check_directed_family(_family(p, S, notion), S, _cfg(p, S), A)
        holds = rep.ok
        rep.add("stored value matches the check", p.get("value") in (None, holds), value=holds)
        return rep
    w = p.get("witness")
    if w is None:
        rep = Report("witness")
        rep.add("witness present", False)
        return rep
    L = p.get("length") or 8
    if notion == "thick":
        return validate_thick(A, parse_query(p["query"], S), _el(w["shift"]), S)
    if notion == "ps":
        return validate_ps(A, [_el(t) for t in w["translates"]], parse_query(p["query"], S), _el(w["x"]), S)
    if notion == "jset":
        fam = parse_family(p["family"], S, L)
        return validate_j_commutative(A, fam, JWitnessCommutative(_el(w["a"]), tuple(w["K"])), S)
    if notion == "jset-general":
        fam = parse_family(p["family"], S, L)
        return validate_j_general(A, fam, JWitnessGeneral(w["m"], tuple(_el(v) for v in w["a"]), tuple(w["t"])), S)
    if notion == "cwps":
        members = [parse_set(m, S) for m in (p.get("members") or [p["set"]])]
        F = _finite(parse_query(p["query"], S), S)
        table = _stored_table(members, w, S)
        return validate_cwps(table, _largeness_subfamily_queries(len(members), F))
    raise ValueError(f"unknown notion {p['notion']!r}")


def emit_largeness(inst: dict) -> dict:
    inst = {**inst, "bounds": {**LARGENESS_DEFAULTS, **(inst.get("bounds") or {})}}
    fields = {**inst, **largeness_result(inst)}
    rep = largeness_validate(jsonable(fields))
    if fields["command"] == "check" and _notion(fields["notion"]) in (chains.QUASI_CENTRAL, chains.CENTRAL, chains.C_SET):
        fields["value"] = rep.ok
        rep = largeness_validate(jsonable(fields))
    fields["validation"] = rep.to_dict()
    fields["validated"] = rep.ok
    return seal("largeness", fields)


# -- transport ------------------------------------------------------------------

TRANSPORT_DEFAULTS = {
    "bound": 1000, "g_bound": 4, "x_bound": 200, "a_bound": 16, "k_size_bound": 3,
    "m_bound": 3, "t_range": 4, "window": 64, "preimage_bound": 64, "depth": None,
}
DIFF_NOTIONS = ("thick", "ps", "jset", "quasi-central", "central", "c-set")
HOM_NOTIONS = ("ps", "central", "jset")


def _bounds(inst: dict) -> dict:
    return {**TRANSPORT_DEFAULTS, **(inst.get("bounds") or {})}


def _hom_setup(inst: dict):
    S = Ambient.parse(inst["ambient"])
    phi = parse_hom(inst["phi"], S)
    A = parse_set(inst["set"], S)
    bd = _bounds(inst)
    win = (-bd["window"], bd["window"] + 1)
    return S, phi, phi.target, A, bd, win


def _source_probe(n: int, S: Ambient) -> tuple:
    return tuple(S.shifts(max(n - 1, 0)))[:n] if S.dim == 1 else (S.zero,)


def transport_run(inst: dict) -> tuple[dict, dict, Report]:
    """Run the transformer described by ``inst``: ``(target, trace, report)``."""
    S = Ambient.parse(inst["ambient"])
    bd = _bounds(inst)
    L = inst.get("length") or 8
    notion = inst["notion"]
    if inst["mode"] == "diff-group":
        A = parse_set(inst["set"], S)
        D = DifferenceGroup(S)
        if notion == "thick":
            F = parse_query(inst["query"], D.model)
            c = tr.thick_to_diffgroup(A, F, S, bound=bd["bound"])
            return {"shift": D.to_value(c.target.shift)}, c.trace, c.report
        if notion == "ps":
            F = parse_query(inst["query"], D.model)
            G = _translates(inst, S)
            if G is None:
                w = ps_common_witness(A, [_source_probe(len(F) + 4, S)], bd["g_bound"], bd["x_bound"], S)
                if w is None:
                    raise Unresolved("A has no piecewise syndetic witness within the bounds")
                G = w.translates
            c = tr.ps_to_diffgroup(A, G, F, S, bound=bd["bound"])
            x = next(iter(c.target.per_query.values()))
            return {"translates": list(G), "x": x}, c.trace, c.report
        if notion == "jset":
            fam = parse_pair_family(inst["family"], S, L)
            c = tr.jset_to_diffgroup(A, fam, S, a_bound=bd["a_bound"], k_size_bound=bd["k_size_bound"])
            return {"a": D.to_value(c.target.a), "K": list(c.target.K)}, c.trace, c.report
        if notion in ("quasi-central", "central", "c-set"):
            fam = _family(inst, S, _notion(notion))
            _, rep = tr.family_to_diffgroup(fam, S, _cfg(inst, S), A)
            return {"holds": rep.ok}, {}, rep
        raise ValueError(f"unknown difference-group notion {notion!r}")
    if inst["mode"] != "hom":
        raise ValueError(f"unknown transport mode {inst['mode']!r}")
    S, phi, T, A, bd, win = _hom_setup(inst)
    phiS = image_set(phi, Full(S), win)
    if notion == "ps":
        F = _finite(parse_query(inst["query"], T), T)
        H = _translates(inst, S)
        if H is None:
            w = ps_common_witness(A, [_source_probe(len(F) + 4, S)], bd["g_bound"], bd["x_bound"], S)
            if w is None:
                raise Unresolved("A has no piecewise syndetic witness within the bounds")
            H = w.translates
        K = _image_translates(inst, phiS, F, T, bd)
        c = tr.ps_under_hom(phi, A, tr.ps_oracle(A, H, S, bd["x_bound"]), tr.ps_oracle(phiS, K, T, bd["x_bound"]),
                            F, win, bd["preimage_bound"])
        x = next(iter(c.target.per_query.values()))
        return {"translates": list(c.target.translates), "x": x, "H": list(H), "K": list(K)}, c.trace, c.report
    if notion == "central":
        F = _finite(parse_query(inst["query"], T), T)
        members = [parse_set(m, S) for m in (inst.get("members") or [inst["set"]])]
        table = search_cwps_table(members, [_source_probe(4, S)], bd["g_bound"], bd["x_bound"], S)
        K = _image_translates(inst, phiS, F, T, bd)
        new, trace = tr.central_under_hom(phi, table, tr.ps_oracle(phiS, K, T, bd["x_bound"]), win,
                                          bd["preimage_bound"])
        queries = _largeness_subfamily_queries(len(new.family), F)
        rep = validate_cwps(new, queries)
        return {"table": new.tabulate(queries), "K_image": list(K)}, trace, rep
    if notion == "jset":
        fam = parse_family(inst["family"], T, L)
        c = tr.jset_under_hom(phi, A, fam, bd["depth"], bd["m_bound"], bd["a_bound"], bd["t_range"],
                              window=win, preimage_bound=bd["preimage_bound"])
        return {"m": c.target.m, "a": list(c.target.a), "t": list(c.target.t)}, c.trace, c.report
    raise ValueError(f"unknown homomorphism notion {notion!r}")


def _translates(inst: dict, S: Ambient):
    text = inst.get("translates")
    return None if not text else _finite(parse_query(text, S), S)


def _image_translates(inst: dict, phiS, F: tuple, T: Ambient, bd: dict) -> tuple:
    text = inst.get("image_translates")
    if text:
        return _finite(parse_query(text, T), T)
    w = ps_common_witness(phiS, [F], bd["g_bound"], bd["x_bound"], T)
    if w is None:
        raise Unresolved("phi(S) has no piecewise syndetic witness within the bounds")
    return w.translates


def transport_validate(p: dict) -> Report:
    """Check the stored target witness directly in the target structure."""
    S = Ambient.parse(p["ambient"])
    t = p["target"]
    notion = p["notion"]
    L = p.get("length") or 8
    if p["mode"] == "diff-group":
        A = parse_set(p["set"], S)
        D = DifferenceGroup(S)
        if notion == "thick":
            return tr.validate_thick_diff(D, A, parse_query(p["query"], D.model), D.from_value(_el(t["shift"])))
        if notion == "ps":
            return tr.validate_ps_diff(D, A, [_el(v) for v in t["translates"]], parse_query(p["query"], D.model),
                                       D.from_value(_el(t["x"])))
        if notion == "jset":
            fam = parse_pair_family(p["family"], S, L)
            w = JWitnessCommutative(D.from_value(_el(t["a"])), tuple(t["K"]))
            return tr.validate_j_diff(D, A, fam, w)
        target, _, rep = transport_run(p)
        rep.add("stored verdict matches", target == jsonable(t) or target == t)
        return rep
    S, phi, T, A, bd, win = _hom_setup(p)
    phiA = image_set(phi, A, win)
    if notion == "ps":
        return validate_ps(phiA, [_el(v) for v in t["translates"]], parse_query(p["query"], T), _el(t["x"]), T)
    if notion == "central":
        members = [parse_set(m, S) for m in (p.get("members") or [p["set"]])]
        images, _ = tr._image_family(phi, members, win)
        F = _finite(parse_query(p["query"], T), T)
        return validate_cwps(_stored_table(images, t["table"], T), _largeness_subfamily_queries(len(images), F))
    if notion == "jset":
        fam = parse_family(p["family"], T, L)
        w = JWitnessGeneral(t["m"], tuple(_el(v) for v in t["a"]), tuple(t["t"]))
        return validate_j_general(phiA, fam, w, T)
    raise ValueError(f"unknown notion {notion!r}")


def _transport_rerun(p: dict) -> Report:
    rep = Report("transformer re-run")
    target, _, trep = transport_run(p)
    rep.add("transformer reproduces the stored target", jsonable(target) == p["target"])
    rep.add("transformer's own checks pass", trep.ok)
    return rep


def emit_transport(inst: dict) -> dict:
    inst = {**inst, "bounds": _bounds(inst)}
    target, trace, trep = transport_run(inst)
    fields = {**inst, "target": target, "trace": trace, "transform_report": trep.to_dict()}
    rep = transport_validate(jsonable(fields))
    fields["validation"] = rep.to_dict()
    fields["validated"] = rep.ok and trep.ok
    return seal("transport", fields)


# -- rado -------------------------------------------------------------------------


def _rado_instance(p: dict):
    G = FGAbelianGroup.parse(p["group"])
    A = _matrix(p["matrix"])
    b = _vector([_el(v) for v in p["b"]], len(A), G)
    return G, A, b


def rado_result(inst: dict) -> dict:
    G, A, b = _rado_instance(inst)
    v = decide_partition_regular(A, b, G, inst.get("window") or 50)
    if v.regular:
        return {"verdict": "regular", "t": list(v.t)}
    out = {"verdict": "not_regular", "phi_coeffs": [str(c) for c in v.phi.coeffs], "d": v.coloring.d,
           "notes": v.notes}
    if G.is_finite:
        out["colors"] = [{"t": list(t), "color": list(c)} for t, c in sorted(v.coloring.table.items())]
    return out


def rado_validate(p: dict) -> tuple[Report, dict]:
    """Validation report plus the ``verification`` summary."""
    G, A, b = _rado_instance(p)
    k, n = len(A), len(A[0])
    rep = Report("partition regularity certificate")
    rep.add("b is nonzero", any(any(c for c in e) for e in b))
    if p["verdict"] == "regular":
        t = G.element(_el(p["t"]))
        ok = apply(A, (t,) * n, G) == b
        rep.add("constant solution A(t, ..., t) = b", ok, t=list(t))
        return rep, {"domain": "constant vector", "solutions_checked": 1, "violations": 0 if ok else 1}
    phi = Character(tuple(Fraction(c) for c in p["phi_coeffs"]), G, k)
    d = int(p["d"])
    H = diagonal_subgroup(A, G)
    rep.add("phi well defined on torsion", phi.torsion_well_defined())
    rep.add("phi vanishes on the diagonal subgroup", all(phi(h) == 0 for h in H.generators))
    phib = phi(b)
    rep.add("phi(b) != 0", phib != 0, phi_b=phib)
    rep.add("n/d < dist(phi(b), 0)", phib != 0 and Fraction(n, d) < circle_dist(phib), n=n, d=d)
    col = Coloring(A, phi, d)
    if G.is_finite:
        stored = {G.element(_el(e["t"])): tuple(e["color"]) for e in p.get("colors") or []}
        elems = G.elements()
        rep.add("color table covers G", set(stored) == set(elems), size=len(stored))
        mism = next((t for t in elems if t in stored and stored[t] != col.color_of(t)), None)
        rep.add("colors are the buckets of phi", mism is None, first_mismatch=None if mism is None else list(mism))
        col.table = stored
        domain, desc = elems, f"all of {G} ({len(elems)} elements)"
    else:
        w = p.get("window") or 50
        domain, desc = G.elements(w), f"free coordinates in [-{w}, {w}]"
    vrep = verify_no_mono_solution(A, b, col, domain)
    rep.extend(vrep)
    main = vrep.checks[0].detail
    return rep, {"domain": desc, "solutions_checked": main["solutions_checked"], "violations": main["violations"],
                 "first_violation": main["violation"]}


def emit_rado(inst: dict) -> dict:
    fields = {**inst, **rado_result(inst)}
    rep, summary = rado_validate(jsonable(fields))
    fields["verification"] = summary
    fields["validation"] = rep.to_dict()
    fields["validated"] = rep.ok
    return seal("rado", fields)
