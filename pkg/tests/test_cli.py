import io
import json
import subprocess
import sys

import pytest

from largeness_lab.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_syndetic_gap():
    code, out, _ = call("largeness", "check", "--ambient", "N", "--set", "periodic:pattern=10", "--notion", "syndetic")
    assert code == 0 and "gap bound: 2" in out


def test_syndetic_over_integers_absent():
    code, out, _ = call("largeness", "check", "--ambient", "Z", "--set", "periodic:pattern=10", "--notion", "syndetic",
                        "--json")
    assert code == 0 and json.loads(out)["value"] is None


def test_rado_regular():
    code, out, _ = call("rado", "decide", "--group", "Z", "--matrix", "[[1,1]]", "--b", "[2]")
    assert code == 0 and "Regular: constant solution t = 1" in out


def test_rado_not_regular_json():
    code, out, _ = call("rado", "decide", "--group", "Z_5", "--matrix", "[[1,-1]]", "--b", "[1]", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["verdict"] == "not_regular" and payload["validated"]


def test_coloring_then_verify(tmp_path):
    cert = tmp_path / "c.json"
    code, _, _ = call("rado", "coloring", "--group", "Z_5", "--matrix", "[[1,-1]]", "--b", "[1]", "--out", str(cert))
    assert code == 0
    assert call("rado", "verify", "--cert", str(cert))[0] == 0
    assert call("verify", "--cert", str(cert))[0] == 0


def test_empty_certificate_fails(tmp_path):
    cert = tmp_path / "empty.json"
    cert.write_text("")
    code, out, _ = call("verify", "--cert", str(cert))
    assert code == 1 and "empty" in out


def test_byte_identical_output(tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        call("transport", "diff-group", "--notion", "jset", "--ambient", "N", "--set", "evens",
             "--family", "linear:1/linear:2", "--out", str(p))
    assert paths[0].read_bytes() == paths[1].read_bytes()


@pytest.mark.parametrize("argv,code", [
    (("rado", "decide", "--group", "Z", "--matrix", "[[1,1]]", "--b", "[0]"), 64),
    (("largeness", "witness", "--ambient", "N", "--set", "evens", "--notion", "thick", "--query", "1,x"), 64),
    (("largeness", "check", "--ambient", "N", "--set", "periodic:pattern=1x0", "--notion", "thick"), 64),
    (("frobnicate",), 64),
    (("largeness", "witness", "--ambient", "N", "--set", "evens", "--notion", "thick", "--query", "0,1"), 2),
    (("transport", "hom", "--phi", "mod:6", "--notion", "jset", "--ambient", "Z", "--set", "all",
      "--family", "linear:1"), 0),
])
def test_exit_codes(argv, code):
    assert call(*argv)[0] == code


def test_usage_error_names_token():
    code, _, err = call("largeness", "witness", "--ambient", "N", "--set", "evens", "--notion", "thick",
                        "--query", "1,x")
    assert code == 64 and "'x'" in err and "position 2" in err


def test_selftest_subset():
    code, out, _ = call("selftest", "--only", "1,8")
    assert code == 0 and out.count("[PASS]") == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "largeness_lab", "rado", "decide", "--group", "Z_5",
                          "--matrix", "[[2]]", "--b", "[3]"], capture_output=True, text=True)
    assert res.returncode == 0 and "t = 4" in res.stdout
