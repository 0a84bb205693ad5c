"""Every acceptance criterion at its stated tolerance; each prints one
PASS/FAIL line (visible with ``pytest -s`` or in ``-v`` captured output)."""

import pytest

from largeness_lab.acceptance import CRITERIA, DEFAULT_SEED


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{c.number}" for c in CRITERIA])
def test_criterion(criterion, capsys):
    res = criterion(DEFAULT_SEED)
    with capsys.disabled():
        print("\n" + res.line())
    assert res.ok, res.detail
