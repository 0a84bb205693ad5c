"""Command line front end.

Exit codes: 0 validated result, 1 validation failure, 2 nothing found within
the bounds, 64 usage or parse error.  ``--json`` prints the certificate
instead of the human-readable summary; ``--out`` writes it to a file.

Set syntax (``--set``, ``--member``)::

    periodic:offset=0,pattern=10[,add=1|5][,remove=4][,two_sided=1]
    window:lo=0,hi=64,bits=<hex>     evens     cofinite:from=10
    all     finite:1|3|7

Queries (``--query``, ``--translates``): ``0,1,2,3``, ``-5..5``, or ``1,0;0,1``
in higher dimensions; write ``--query=-5..5`` when the value starts with ``-``.
Sequences (``--family``): ``const:C``, ``linear:S[:I]``, ``values:1|2``,
``cycle:0|1`` separated by ``;``; pair sequences for the difference group as
``PLUS/MINUS``.  Homomorphisms (``--phi``): ``scale:2``, ``mod:6``,
``matrix:[[1,0],[1,1]]``, ``id``, composed with ``;``.  Groups (``--group``):
``Z``, ``Z_5``, ``Z^2``, ``Z_4xZ_6``.  The environment variable
``LARGENESS_LAB_MAX_ENUM`` overrides the enumeration cap (default 10^7).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import certificates as certs
from .dsl import DSLError
from .homs import HomError
from .rado import BZero, EnumerationCap, RadoError
from .reports import Report, Unresolved
from .semigroups import AmbientError
from .sets import SetParseError

EXIT_OK, EXIT_FAIL, EXIT_UNRESOLVED, EXIT_USAGE = 0, 1, 2, 64
DEFAULT_SEED = 20240917


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="print JSON")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized runs")
    p.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                   help="worker cap (work is currently single-threaded)")
    return p


def _bounds(p: argparse.ArgumentParser, *names: str) -> None:
    for n in names:
        p.add_argument(f"--{n.replace('_', '-')}", dest=f"b_{n}", type=int, metavar="N")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    root = _Parser(prog="largeness-lab", description=__doc__, parents=[common],
                   formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = root.add_subparsers(dest="area", required=True, parser_class=_Parser)

    lg = sub.add_parser("largeness", help="deciders and witness searches").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    c = lg.add_parser("check", parents=[common], help="exact decision or directed-family check")
    c.add_argument("--ambient", default="N")
    c.add_argument("--set", required=True)
    c.add_argument("--notion", required=True, choices=["thick", "syndetic", "quasi-central", "central", "c-set"])
    c.add_argument("--member", action="append", help="chain member C_F (repeat; later members nested)")
    c.add_argument("--query", help="sample query for the family checks")
    c.add_argument("--out")
    _bounds(c, "window", "g_bound", "x_bound", "a_bound", "k_size_bound")
    w = lg.add_parser("witness", parents=[common], help="bounded witness search plus validation")
    w.add_argument("--ambient", default="N")
    w.add_argument("--set", required=True)
    w.add_argument("--notion", required=True, choices=["thick", "ps", "jset", "jset-general", "cwps"])
    w.add_argument("--query")
    w.add_argument("--family")
    w.add_argument("--length", type=int, default=8)
    w.add_argument("--member", action="append")
    w.add_argument("--out")
    _bounds(w, "bound", "g_bound", "x_bound", "a_bound", "k_size_bound", "m_bound", "t_range")

    tg = sub.add_parser("transport", help="witness transformers").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    d = tg.add_parser("diff-group", parents=[common], help="from S to the difference group S - S")
    d.add_argument("--notion", required=True, choices=list(certs.DIFF_NOTIONS))
    d.add_argument("--ambient", default="N")
    d.add_argument("--set", required=True)
    d.add_argument("--query")
    d.add_argument("--translates")
    d.add_argument("--family")
    d.add_argument("--length", type=int, default=8)
    d.add_argument("--member", action="append")
    d.add_argument("--out")
    _bounds(d, "bound", "g_bound", "x_bound", "a_bound", "k_size_bound", "window")
    h = tg.add_parser("hom", parents=[common], help="along a homomorphism phi: S -> T")
    h.add_argument("--phi", required=True)
    h.add_argument("--notion", required=True, choices=list(certs.HOM_NOTIONS))
    h.add_argument("--ambient", default="N", help="source ambient S")
    h.add_argument("--set", required=True)
    h.add_argument("--query")
    h.add_argument("--translates", help="translate set for A in S")
    h.add_argument("--image-translates", help="translate set for phi(S) in T")
    h.add_argument("--family")
    h.add_argument("--length", type=int, default=8)
    h.add_argument("--member", action="append")
    h.add_argument("--out")
    _bounds(h, "g_bound", "x_bound", "m_bound", "a_bound", "t_range", "window", "preimage_bound", "depth")

    rg = sub.add_parser("rado", help="partition regularity of Ax = b").add_subparsers(
        dest="cmd", required=True, parser_class=_Parser)
    for name, hlp in (("decide", "decide and verify"), ("coloring", "decide and write the certificate")):
        r = rg.add_parser(name, parents=[common], help=hlp)
        r.add_argument("--group", required=True)
        r.add_argument("--matrix", required=True, help="JSON rows, e.g. [[1,-1]]")
        r.add_argument("--b", required=True, help="JSON vector, e.g. [1] or [[1,0]]")
        r.add_argument("--window", type=int, default=50, help="free-coordinate window for infinite groups")
        r.add_argument("--out", required=name == "coloring")
    v = rg.add_parser("verify", parents=[common], help="re-validate a certificate file")
    v.add_argument("--cert", required=True)

    v = sub.add_parser("verify", parents=[common], help="re-validate any certificate file")
    v.add_argument("--cert", required=True)

    s = sub.add_parser("selftest", parents=[common], help="run the acceptance suite")
    s.add_argument("--only", help="comma-separated criterion numbers")
    return root


def _collect_bounds(args) -> dict:
    return {k[2:]: v for k, v in vars(args).items() if k.startswith("b_") and v is not None}


def _json_arg(text: str, name: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--{name}: bad JSON at position {exc.pos} in {text!r}: {exc.msg}") from None


def _instance(args) -> tuple[str, dict]:
    if args.area == "largeness":
        inst = {"command": args.cmd, "notion": args.notion, "ambient": args.ambient, "set": args.set,
                "query": args.query, "members": args.member, "bounds": _collect_bounds(args)}
        if args.cmd == "witness":
            inst.update(family=args.family, length=args.length)
            need = {"thick": "query", "ps": "query", "cwps": "query", "jset": "family", "jset-general": "family"}
            if inst.get(need[args.notion]) is None:
                raise UsageError(f"--notion {args.notion} needs --{need[args.notion]}")
        return "largeness", inst
    if args.area == "transport":
        inst = {"mode": args.cmd, "notion": args.notion, "ambient": args.ambient, "set": args.set,
                "query": args.query, "translates": args.translates, "family": args.family,
                "length": args.length, "members": args.member, "bounds": _collect_bounds(args)}
        if args.cmd == "hom":
            inst.update(phi=args.phi, image_translates=args.image_translates)
            need = {"ps": "query", "central": "query", "jset": "family"}[args.notion]
        else:
            need = {"thick": "query", "ps": "query", "jset": "family"}.get(args.notion)
        if need and inst.get(need) is None:
            raise UsageError(f"--notion {args.notion} needs --{need}")
        return "transport", inst
    matrix, b = _json_arg(args.matrix, "matrix"), _json_arg(args.b, "b")
    return "rado", {"group": args.group, "matrix": matrix, "b": b, "window": args.window}


def _summary(kind: str, p: dict) -> str:
    if kind == "rado":
        if p["verdict"] == "regular":
            return f"Regular: constant solution t = {_fmt(p['t'])}"
        v = p["verification"]
        return (f"NotRegular: phi coefficients {p['phi_coeffs']}, d = {p['d']}, "
                f"{v['solutions_checked']} solutions on {v['domain']}, {v['violations']} monochromatic")
    if kind == "largeness" and p["command"] == "check":
        if p["notion"] == "syndetic":
            return "gap bound: " + ("absent (gaps unbounded)" if p["value"] is None else str(p["value"]))
        if p["notion"] == "thick":
            return f"thick: {p['value']}"
        return f"{p['notion']} chain conditions hold on the samples: {p['value']}"
    if kind == "largeness":
        return f"{p['notion']} witness: {json.dumps(p['witness'])}"
    return f"{p['mode']} {p['notion']} target: {json.dumps(p['target'])}"


def _fmt(t):
    return t[0] if isinstance(t, list) and len(t) == 1 else t


def _report_dict_text(d: dict) -> str:
    lines = [f"{d['title']}: {'PASS' if d['ok'] else 'FAIL'}"]
    for c in d["checks"]:
        extra = f"  {json.dumps(c['detail'])}" if c["detail"] and not c["ok"] else ""
        lines.append(f"  [{'ok' if c['ok'] else 'FAIL'}] {c['name']}{extra}")
    return "\n".join(lines)


def _emit(args, out) -> int:
    kind, inst = _instance(args)
    payload = {"largeness": certs.emit_largeness, "transport": certs.emit_transport,
               "rado": certs.emit_rado}[kind](inst)
    if getattr(args, "out", None):
        certs.write(payload, args.out)
    if getattr(args, "json", False):
        out.write(certs.canonical(payload))
    else:
        out.write(_summary(kind, payload) + "\n")
        out.write(_report_dict_text(payload["validation"]) + "\n")
        if getattr(args, "out", None):
            out.write(f"certificate written to {args.out}\n")
    return EXIT_OK if payload["validated"] else EXIT_FAIL


def _verify(args, out) -> int:
    try:
        rep = certs.verify_file(args.cert)
    except certs.SchemaError as exc:
        rep = Report("certificate")
        rep.add("schema", False, error=str(exc))
    except OSError as exc:
        raise UsageError(f"cannot read {args.cert}: {exc.strerror}") from None
    if getattr(args, "json", False):
        out.write(json.dumps(rep.to_dict(), sort_keys=True, indent=2) + "\n")
    else:
        out.write(str(rep) + "\n")
    return EXIT_OK if rep.ok else EXIT_FAIL


def _selftest(args, out, err) -> int:
    from . import acceptance

    only = None
    if args.only:
        try:
            only = [int(v) for v in args.only.split(",")]
        except ValueError:
            raise UsageError(f"--only: expected numbers, got {args.only!r}") from None
    as_json = getattr(args, "json", False)
    results = acceptance.run_all(seed=getattr(args, "seed", DEFAULT_SEED), only=only, stream=err if as_json else out)
    if as_json:
        out.write(json.dumps([r.to_dict() for r in results], indent=2) + "\n")
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
        if getattr(args, "threads", 1) < 1:
            raise UsageError("--threads must be at least 1")
        if args.area == "verify" or (args.area == "rado" and args.cmd == "verify"):
            return _verify(args, out)
        if args.area == "selftest":
            return _selftest(args, out, err)
        return _emit(args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (DSLError, SetParseError, AmbientError, HomError, BZero) as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (Unresolved, EnumerationCap) as exc:
        err.write(f"unresolved within bounds: {exc}\n")
        return EXIT_UNRESOLVED
    except RadoError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
