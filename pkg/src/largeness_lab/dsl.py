"""Text syntax for finite queries and sequence families.

Queries (finite subsets):

* one-dimensional ambients: ``0,1,2,3``, ``-5..5`` or a mix ``0,4..6``;
* higher dimensions: elements separated by ``;``, e.g. ``1,0;0,1``.

Sequences, separated by ``;`` in a family:

* ``const:C``            every term equals ``C``;
* ``linear:S[:I]``       ``t -> I + S t`` (``t = 1, 2, ...``);
* ``values:v1|v2|...``   explicit finite prefix, no tail;
* ``cycle:v1|v2|...``    the listed values repeated forever.

A pair family for the difference group writes each member as
``PLUS/MINUS``, e.g. ``linear:1/linear:2`` for ``t - 2t``.
"""

from __future__ import annotations

import re

from .largeness import Sequence
from .semigroups import Ambient, Element


class DSLError(ValueError):
    pass


def _tokens(text: str, sep: str):
    """Split ``text`` on ``sep``, yielding ``(offset, token)`` with whitespace stripped."""
    pos = 0
    for part in text.split(sep):
        lead = len(part) - len(part.lstrip())
        yield pos + lead, part.strip()
        pos += len(part) + len(sep)


def _fail(kind: str, tok: str, pos: int, text: str, why: str = "") -> DSLError:
    extra = f": {why}" if why else ""
    return DSLError(f"bad {kind} token {tok!r} at position {pos} in {text!r}{extra}")


def parse_element(tok: str, ambient: Ambient, text: str = "", pos: int = 0) -> Element:
    try:
        vals = [int(v) for v in tok.strip().strip("()").split(",")]
    except ValueError:
        raise _fail("element", tok, pos, text or tok) from None
    if len(vals) != ambient.dim:
        raise _fail("element", tok, pos, text or tok, f"expected {ambient.dim} coordinate(s)")
    return vals[0] if ambient.dim == 1 else tuple(vals)


def parse_query(text: str, ambient: Ambient) -> tuple:
    """Finite nonempty subset, duplicates removed, order of first appearance kept."""
    items: list = []
    if ambient.dim == 1:
        for pos, tok in _tokens(text, ","):
            m = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", tok)
            if m:
                items.extend(range(int(m.group(1)), int(m.group(2)) + 1))
            elif re.fullmatch(r"-?\d+", tok):
                items.append(int(tok))
            else:
                raise _fail("query", tok, pos, text)
    else:
        for pos, tok in _tokens(text, ";"):
            items.append(parse_element(tok, ambient, text, pos))
    out = list(dict.fromkeys(items))
    if not out:
        raise DSLError(f"empty query {text!r}")
    return tuple(out)


def parse_int_list(text: str) -> tuple:
    out = []
    for pos, tok in _tokens(text, ","):
        if not re.fullmatch(r"-?\d+", tok):
            raise _fail("integer", tok, pos, text)
        out.append(int(tok))
    return tuple(out)


def parse_sequence(tok: str, ambient: Ambient, length: int = 8, text: str = "", pos: int = 0) -> Sequence:
    text = text or tok
    head, _, arg = tok.partition(":")
    try:
        if head == "const":
            return Sequence.constant(parse_element(arg, ambient, text, pos), length)
        if head == "linear":
            if ambient.dim != 1:
                raise _fail("sequence", tok, pos, text, "linear sequences need a one-dimensional ambient")
            parts = arg.split(":")
            slope, intercept = int(parts[0]), int(parts[1]) if len(parts) > 1 else 0
            return Sequence.linear(slope, intercept, length)
        if head in ("values", "cycle"):
            vals = tuple(parse_element(v, ambient, text, pos) for v in arg.split("|") if v.strip())
            if not vals:
                raise _fail("sequence", tok, pos, text, "no values")
            if head == "values":
                return Sequence(vals)
            reps = -(-length // len(vals))
            return Sequence((vals * reps)[: max(length, len(vals))], ("periodic", len(vals)))
    except (ValueError, IndexError) as exc:
        if isinstance(exc, DSLError):
            raise
        raise _fail("sequence", tok, pos, text) from None
    raise _fail("sequence", tok, pos, text, "expected const:, linear:, values: or cycle:")


def parse_family(text: str, ambient: Ambient, length: int = 8) -> list[Sequence]:
    return [parse_sequence(tok, ambient, length, text, pos) for pos, tok in _tokens(text, ";")]


def parse_pair_family(text: str, ambient: Ambient, length: int = 8):
    from .transport import PairSequence

    out = []
    for pos, tok in _tokens(text, ";"):
        plus, slash, minus = tok.partition("/")
        if not slash:
            raise _fail("pair sequence", tok, pos, text, "expected PLUS/MINUS")
        out.append(PairSequence(parse_sequence(plus, ambient, length, text, pos),
                                parse_sequence(minus, ambient, length, text, pos + len(plus) + 1)))
    return out
