import json

import pytest

from largeness_lab import certificates as certs
from largeness_lab.acceptance import CERT_CORPUS, EMIT, flip_color


@pytest.mark.parametrize("kind,inst", CERT_CORPUS, ids=[f"{k}-{i}" for i, (k, _) in enumerate(CERT_CORPUS)])
def test_emit_verify_roundtrip(tmp_path, kind, inst):
    payload = EMIT[kind](inst)
    assert payload["validated"]
    path = tmp_path / "c.json"
    certs.write(payload, path)
    text = path.read_text()
    assert text == certs.canonical(payload) and text.endswith("\n")
    assert certs.verify_file(path).ok


def test_emit_is_deterministic():
    inst = dict(group="Z_4xZ_6", matrix=[[1, -1], [2, 1]], b=[[1, 0], [0, 3]])
    assert certs.canonical(certs.emit_rado(inst)) == certs.canonical(certs.emit_rado(inst))


def test_digest_covers_payload():
    p = certs.emit_rado(dict(group="Z_5", matrix=[[1, -1]], b=[1]))
    q = json.loads(certs.canonical(p))
    q["d"] = q["d"] + 1
    rep = certs.verify_text(certs.canonical(q))
    assert "digest matches" in {c.name for c in rep.failures()}


def test_flipped_color_reports_violation():
    p = certs.emit_rado(dict(group="Z_5", matrix=[[1, -1]], b=[1]))
    flipped, _ = flip_color(p)
    rep = certs.verify_text(certs.canonical(flipped))
    assert not rep.ok
    check = next(c for c in rep.checks if c.name == "zero monochromatic solutions")
    assert not check.ok and check.detail["violation"] is not None


@pytest.mark.parametrize("text,match", [
    ("", "empty"),
    ("{", "JSON"),
    ("[1]", "object"),
])
def test_schema_errors(text, match):
    with pytest.raises(certs.SchemaError, match=match):
        certs.load(text)


def test_version_skew_and_unknown_kind():
    p = certs.emit_rado(dict(group="Z", matrix=[[1, 1]], b=[2]))
    for key, value in (("schema_version", 99), ("kind", "nope")):
        q = dict(p, **{key: value})
        with pytest.raises(certs.SchemaError):
            certs.load(certs.canonical(q))


def test_missing_field():
    p = certs.emit_rado(dict(group="Z", matrix=[[1, 1]], b=[2]))
    q = {k: v for k, v in p.items() if k != "matrix"}
    with pytest.raises(certs.SchemaError, match="matrix"):
        certs.load(certs.canonical(q))


def test_non_canonical_bytes_fail():
    p = certs.emit_rado(dict(group="Z", matrix=[[1, 1]], b=[2]))
    text = json.dumps(p)
    rep = certs.verify_text(text)
    assert "canonical encoding" in {c.name for c in rep.failures()}
