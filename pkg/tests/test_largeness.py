import itertools

import pytest
from hypothesis import given, strategies as st

from largeness_lab.largeness import (
    JWitnessCommutative, JWitnessGeneral, NAT, Sequence, general_from_commutative, is_thick_exact,
    j_witness_commutative, j_witness_general, ps_witness, syndetic_gap_bound, thick_witness,
    validate_j_commutative, validate_j_general, validate_ps, validate_thick, x_product,
)
from largeness_lab.semigroups import Ambient
from largeness_lab.sets import EventuallyPeriodic, Full, cofinite, evens, multiples

Z = Ambient.integers()
EMPTY = EventuallyPeriodic("0")


# -- thick ------------------------------------------------------------------

def test_thick_witness_examples():
    assert thick_witness(Full(NAT), [1, 5], 10).shift == 0
    assert thick_witness(evens(), [0, 1], 10**4) is None
    assert thick_witness(cofinite(10), [-2, 5], 100, Z).shift == 12


def test_is_thick_exact_examples():
    assert is_thick_exact(EventuallyPeriodic("1"))
    assert not is_thick_exact(evens())
    assert not is_thick_exact(EventuallyPeriodic("110", added={1, 2}, removed={3}))


def _brute_thick_shift(A, F, bound):
    return next((x for x in range(bound + 1) if all(A.contains(f + x) for f in F)), None)


@given(st.text("01", min_size=1, max_size=6), st.integers(0, 8),
       st.lists(st.integers(0, 12), min_size=1, max_size=4))
def test_thick_witness_is_least_shift(pattern, offset, F):
    A = EventuallyPeriodic(pattern, offset)
    w = thick_witness(A, F, 60)
    assert (w.shift if w else None) == _brute_thick_shift(A, F, 60)
    if w:
        assert validate_thick(A, F, w.shift).ok


# -- syndetic ------------------------------------------------------------------

def test_gap_bound_examples():
    assert syndetic_gap_bound(evens(), NAT) == 2
    assert syndetic_gap_bound(evens(), Z) is None
    assert syndetic_gap_bound(EMPTY, NAT) is None
    assert syndetic_gap_bound(multiples(3, two_sided=True), Z) == 3


@given(st.text("01", min_size=1, max_size=8).filter(lambda p: "1" in p), st.integers(0, 8))
def test_gap_bound_matches_interval_scan(pattern, offset):
    A = EventuallyPeriodic(pattern, offset)
    g = syndetic_gap_bound(A, NAT)
    members = [n for n in range(400) if A.contains(n)]
    # every interval [s, s+g) meets A, and some interval of length g-1 misses it
    assert all(any(A.contains(n) for n in range(s, s + g)) for s in range(200))
    assert g == 1 or any(not any(A.contains(n) for n in range(s, s + g - 1)) for s in range(200))
    assert members


# -- piecewise syndetic ------------------------------------------------------------

def test_ps_witness_examples():
    assert ps_witness(evens(), [0, 1, 2, 3], 2, 10) == ((0, 1), 0)
    G, x = ps_witness(cofinite(10), [0, 1, 2], 0, 30)
    assert G == (0,) and x == 10
    assert ps_witness(EMPTY, [0], 3, 10) is None


@given(st.text("01", min_size=1, max_size=5).filter(lambda p: "1" in p), st.lists(st.integers(0, 10), min_size=1, max_size=4))
def test_ps_witness_validates(pattern, F):
    A = EventuallyPeriodic(pattern)
    G, x = ps_witness(A, F, 5, 40)
    assert validate_ps(A, G, F, x).ok


# -- x_product and J-sets -------------------------------------------------------

def test_x_product_examples():
    assert x_product(1, (0, 0), (3,), Sequence.linear(1)) == 3
    assert x_product(2, (1, 2, 3), (1, 4), Sequence.constant(5)) == 16
    assert x_product(1, (0, 0), (2,), Sequence.linear(7)) == 14


def test_x_product_rejects_bad_indices():
    with pytest.raises((ValueError, IndexError)):
        x_product(2, (0, 0, 0), (3, 1), Sequence.linear(1))


def test_j_commutative_examples():
    fam = [Sequence.constant(0, 4), Sequence.constant(1, 4)]
    assert j_witness_commutative(evens(), fam, 8, 3) == JWitnessCommutative(0, (1, 2))
    assert j_witness_commutative(Full(NAT), [Sequence.linear(3)], 8, 3) == JWitnessCommutative(0, (1,))


def test_j_commutative_tie_break_for_identity_sequence():
    # |K| ascending first gives (1, {1}); the witness (0, {1, 3}) is also valid
    fam = [Sequence.linear(1)]
    assert j_witness_commutative(evens(), fam, 8, 3) == JWitnessCommutative(1, (1,))
    assert validate_j_commutative(evens(), fam, JWitnessCommutative(0, (1, 3))).ok


def _brute_j(A, fam, a_bound, k_bound):
    L = min(f.prefix_len for f in fam)
    for k in range(1, k_bound + 1):
        for K in itertools.combinations(range(1, L + 1), k):
            for a in range(a_bound + 1):
                if all(A.contains(a + sum(f(t) for t in K)) for f in fam):
                    return JWitnessCommutative(a, K)
    return None


seqs = st.builds(lambda s, i: Sequence.linear(s, i, 6), st.integers(0, 4), st.integers(0, 4))


@given(st.integers(1, 4), st.lists(seqs, min_size=1, max_size=3))
def test_j_commutative_matches_brute_order(k, fam):
    A = multiples(k)
    assert j_witness_commutative(A, fam, 5, 3) == _brute_j(A, fam, 5, 3)


def test_j_general_examples():
    w = j_witness_general(Full(NAT), [Sequence.linear(2)], 3, 2, 4)
    assert (w.m, w.a, w.t) == (1, (0, 0), (1,))
    w = j_witness_general(evens(), [Sequence.constant(1)], 3, 2, 4)
    assert validate_j_general(evens(), [Sequence.constant(1)], w).ok
    assert validate_j_general(evens(), [Sequence.constant(1)], JWitnessGeneral(2, (0, 0, 0), (1, 2))).ok
    assert j_witness_general(EMPTY, [Sequence.constant(1)], 3, 2, 4) is None


@given(st.integers(0, 6), st.lists(st.integers(1, 6), min_size=1, max_size=3, unique=True))
def test_general_form_reproduces_sum_form(a, K):
    K = tuple(sorted(K))
    f = Sequence.linear(3, 1)
    g = general_from_commutative(JWitnessCommutative(a, K))
    assert x_product(g.m, g.a, g.t, f) == a + sum(f(t) for t in K)


def test_empty_family_rejected():
    with pytest.raises(ValueError):
        j_witness_commutative(evens(), [], 4, 2)
