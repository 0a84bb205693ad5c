import numpy as np
import pytest
from hypothesis import given, strategies as st

from largeness_lab.semigroups import Ambient
from largeness_lab.sets import EventuallyPeriodic, SetParseError, Window, cofinite, evens, multiples, parse_set

patterns = st.text("01", min_size=1, max_size=8)


@given(patterns, st.integers(0, 10), st.frozensets(st.integers(0, 30), max_size=3),
       st.frozensets(st.integers(0, 30), max_size=3))
def test_mask_matches_contains(pattern, offset, added, removed):
    A = EventuallyPeriodic(pattern, offset, added, removed)
    m = A.mask(0, 80)
    assert m.tolist() == [A.contains(n) for n in range(80)]


@given(patterns, st.integers(0, 10), st.booleans())
def test_describe_roundtrip(pattern, offset, two_sided):
    A = EventuallyPeriodic(pattern, offset, two_sided=two_sided)
    B = parse_set(A.describe())
    assert all(A.contains(n) == B.contains(n) for n in range(-30, 60))


def test_named_sets():
    assert [n for n in range(8) if evens().contains(n)] == [0, 2, 4, 6]
    assert [n for n in range(10) if multiples(3).contains(n)] == [0, 3, 6, 9]
    assert not cofinite(5).contains(4) and cofinite(5).contains(5)
    assert multiples(2, two_sided=True).contains(-4)


def test_parse_forms():
    assert parse_set("periodic:offset=2,pattern=10,add=1,remove=4").contains(1)
    assert not parse_set("periodic:offset=2,pattern=10,add=1,remove=4").contains(4)
    assert parse_set("all", Ambient.integers()).contains(-7)
    assert parse_set("finite:1|(2,3)").contains((2, 3))
    w = parse_set("window:lo=0,hi=8,bits=5")
    assert isinstance(w, Window) and w.members() == [0, 2]


@pytest.mark.parametrize("text", ["periodic:pattern=12", "periodic:offset=1", "blob:x=1", "periodic:pattern"])
def test_parse_errors(text):
    with pytest.raises((SetParseError, ValueError)):
        parse_set(text)


def test_window_mask_is_numpy():
    assert isinstance(evens().mask(0, 4), np.ndarray)
