import itertools

import pytest
from hypothesis import given, strategies as st

from largeness_lab import transport as tr
from largeness_lab.chains import CENTRAL, C_SET, CheckConfig, DirectedFamily, QUASI_CENTRAL, constant_table, \
    cwps_queries, search_cwps_table, validate_cwps
from largeness_lab.homs import HomError, image_set, parse_hom
from largeness_lab.largeness import NAT, Sequence, ps_common_witness, syndetic_gap_bound, validate_j_general
from largeness_lab.reports import Unresolved
from largeness_lab.semigroups import Ambient, DiffPair
from largeness_lab.sets import EventuallyPeriodic, Full, cofinite, evens, multiples

Z, N2 = Ambient.integers(), Ambient.naturals(2)
Z6 = Ambient.cyclic(6)


# -- difference group --------------------------------------------------------------

def test_thick_examples():
    c = tr.thick_to_diffgroup(cofinite(10), [DiffPair(3, 5), DiffPair(7, 2)], NAT)
    assert c.trace["sum_minus"] == 7 and c.trace["G"] == [5, 12] and c.trace["oracle_shift"] == 5
    assert c.target.shift == DiffPair(12, 0) and c.valid
    assert tr.thick_to_diffgroup(Full(NAT), [DiffPair(0, 0)], NAT).target.shift == DiffPair(0, 0)


def test_thick_example_in_two_dimensions():
    # (1,0) + sum of minus parts (0,1) minus its own (0,1) leaves G = {(1,0)}
    c = tr.thick_to_diffgroup(Full(N2), [DiffPair((1, 0), (0, 1))], N2)
    assert c.trace["sum_minus"] == (0, 1) and c.trace["G"] == [(1, 0)]
    assert c.trace["oracle_shift"] == (0, 0) and c.target.shift == DiffPair((0, 1), (0, 0)) and c.valid


def test_thick_unresolved():
    with pytest.raises(Unresolved):
        tr.thick_to_diffgroup(evens(), [DiffPair(0, 0), DiffPair(1, 0)], NAT, bound=50)


def test_ps_examples():
    assert tr.ps_to_diffgroup(evens(), [0, 1], range(-6, 7), NAT).valid
    assert tr.ps_to_diffgroup(Full(NAT), [0], [-3, 4], NAT).valid
    c = tr.ps_to_diffgroup(multiples(4), [0, 1, 2, 3], range(-5, 6), NAT)
    assert c.valid and c.target.translates == (0, 1, 2, 3)


def test_jset_examples():
    c = tr.jset_to_diffgroup(evens(), [tr.PairSequence(Sequence.linear(1), Sequence.linear(2))], NAT)
    assert c.valid
    a, K, b = c.trace["oracle_a"], c.trace["K"], c.trace["b"]
    assert b == sum(2 * t for t in K)
    assert (a + b + sum(t - 2 * t for t in K)) % 2 == 0
    c = tr.jset_to_diffgroup(multiples(3), [tr.PairSequence(Sequence.linear(2), Sequence.linear(1))], NAT)
    assert c.valid and c.trace["b"] == sum(c.trace["K"])


def test_jset_with_zero_minus_is_unchanged():
    from largeness_lab.largeness import j_witness_commutative
    fam = [tr.PairSequence(Sequence.linear(1), Sequence.constant(0))]
    c = tr.jset_to_diffgroup(evens(), fam, NAT)
    w = j_witness_commutative(evens(), [Sequence.linear(1)], 16, 3)
    assert c.trace["b"] == 0 and c.trace["oracle_a"] == w.a and tuple(c.trace["K"]) == w.K


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
                min_size=1, max_size=3), st.integers(1, 3))
def test_jset_identity_property(coeffs, k):
    fam = [tr.PairSequence(Sequence.linear(a, b), Sequence.linear(c, d)) for a, b, c, d in coeffs]
    cert = tr.jset_to_diffgroup(multiples(k), fam, NAT)
    a, K, b = cert.trace["oracle_a"], cert.trace["K"], cert.trace["b"]
    for i, f in enumerate(fam):
        h = [f.plus(t) + sum(g.minus(t) for j, g in enumerate(fam) if j != i) for t in K]
        assert a + b + sum(f.plus(t) - f.minus(t) for t in K) == a + sum(h)
        assert (a + b + sum(f.plus(t) - f.minus(t) for t in K)) % k == 0


@pytest.mark.parametrize("kind", [QUASI_CENTRAL, CENTRAL, C_SET])
def test_family_to_diffgroup(kind):
    fam = DirectedFamily.chain({F: EventuallyPeriodic("10", offset=2 * F) for F in (1, 2, 3)}, kind=kind)
    _, rep = tr.family_to_diffgroup(fam, NAT, CheckConfig(), evens())
    assert rep.ok


def test_family_to_diffgroup_keeps_structure_failures():
    from largeness_lab.sets import FiniteSet
    fam = DirectedFamily.chain({F: FiniteSet(frozenset({F})) for F in (1, 2)})
    _, rep = tr.family_to_diffgroup(fam, NAT)
    assert "downward nested (F >= G implies C_F inside C_G)" in {c.name for c in rep.failures()}


def test_cwps_examples():
    t = tr.cwps_to_diffgroup(constant_table([Full(NAT)], [0], 0))
    assert t.x(frozenset({0}), (-3, 2)) == 3
    base = constant_table([evens()], [0, 1], 0)
    t = tr.cwps_to_diffgroup(base)
    assert t.x(frozenset({0}), (1, 4)) == base.x(frozenset({0}), (1, 4))
    t = tr.cwps_to_diffgroup(constant_table([evens(), multiples(4)], [0, 1, 2, 3], 0))
    fam = DirectedFamily.chain({0: evens(), 1: multiples(4)})
    assert validate_cwps(t, cwps_queries(fam, CheckConfig(queries=[tuple(range(-4, 5))]))).ok


# -- homomorphisms -------------------------------------------------------------------

def test_image_set_examples():
    img = image_set(parse_hom("scale:2", NAT), Full(NAT))
    assert [n for n in range(10) if img.contains(n)] == [0, 2, 4, 6, 8]
    img = image_set(parse_hom("mod:6", Z), multiples(3, two_sided=True))
    assert [n for n in range(6) if img.contains(n)] == [0, 3]
    assert image_set(parse_hom("id", NAT), evens()) == evens()


@given(st.sampled_from(["scale:2", "scale:3", "mod:4", "mod:6", "scale:2;mod:6"]),
       st.integers(-50, 50), st.integers(-50, 50))
def test_hom_law(text, a, b):
    phi = parse_hom(text, Z)
    T = phi.target
    assert phi(a + b) == T.add(phi(a), phi(b))
    assert phi.check_law([(a, b)])


@given(st.sampled_from(["scale:2", "mod:5", "scale:3;mod:6"]), st.integers(-20, 20))
def test_preimage(text, x):
    phi = parse_hom(text, Z)
    y = phi(x)
    q = phi.preimage(y)
    assert q is not None and phi(q) == y


def test_bad_hom():
    with pytest.raises(HomError):
        parse_hom("twist:2", NAT)


def test_ps_under_hom_examples():
    phi = parse_hom("scale:2", NAT)
    c = tr.ps_under_hom(phi, Full(NAT), tr.ps_oracle(Full(NAT), [0], NAT),
                        tr.ps_oracle(image_set(phi, Full(NAT)), [0, 1], NAT), range(11))
    assert c.valid and c.target.translates == (0, 1)
    phi = parse_hom("mod:6", Z)
    A = multiples(2, two_sided=True)
    c = tr.ps_under_hom(phi, A, tr.ps_oracle(A, [0, 1], Z), tr.ps_oracle(Full(Z6), [0], Z6), range(6))
    assert c.valid and set(c.target.translates) <= set(range(6))


def test_ps_under_identity_passes_through():
    phi = parse_hom("id", NAT)
    c = tr.ps_under_hom(phi, evens(), tr.ps_oracle(evens(), [0, 1], NAT), tr.ps_oracle(Full(NAT), [0], NAT),
                        [0, 1, 2, 5])
    assert c.valid and c.target.translates == (0, 1)


def _central(phi_text, S, A, F):
    phi = parse_hom(phi_text, S)
    T = phi.target
    phiS = image_set(phi, Full(S))
    K = ps_common_witness(phiS, [F], 4, 200, T).translates
    table = search_cwps_table([A], [(0, 1, 2, 3)], 4, 120, S)
    new, trace = tr.central_under_hom(phi, table, tr.ps_oracle(phiS, K, T))
    fam = DirectedFamily.chain({0: None})
    return validate_cwps(new, cwps_queries(fam, CheckConfig(queries=[F]))), new


def test_central_under_hom_examples():
    rep, new = _central("scale:2", NAT, Full(NAT), tuple(range(0, 201, 7)))
    assert rep.ok
    rep, _ = _central("mod:6", Z, multiples(2, two_sided=True), tuple(range(6)))
    assert rep.ok
    rep, new = _central("id", NAT, evens(), (0, 1, 2, 3))
    assert rep.ok and new.family == (evens(),)


def test_jset_under_hom_examples():
    phi = parse_hom("scale:2", NAT)
    fam = [Sequence.constant(1, 12)]
    c = tr.jset_under_hom(phi, Full(NAT), fam, t_range=6)
    assert c.valid
    w = c.target
    from largeness_lab.largeness import x_product
    assert x_product(w.m, w.a, w.t, fam[0]) % 2 == 0
    phi = parse_hom("mod:6", Z)
    fam = [Sequence.from_function(lambda t: t % 6, 12)]
    c = tr.jset_under_hom(phi, Full(Z), fam, depth=3, t_range=6)
    assert c.valid and validate_j_general(Full(Z6), fam, c.target, Z6).ok


def test_jset_under_identity_collapses():
    c = tr.jset_under_hom(parse_hom("id", NAT), evens(), [Sequence.constant(1)])
    assert c.valid and c.trace == {"collapsed": True}


def test_certificate_to_dict_is_json():
    import json
    c = tr.thick_to_diffgroup(cofinite(10), [DiffPair(3, 5)], NAT)
    json.dumps(c.to_dict())


@pytest.mark.parametrize("F", [list(itertools.chain(range(-3, 0), range(4, 7)))])
def test_ps_uses_gap_translates(F):
    A = EventuallyPeriodic("1001", 3)
    G = tuple(range(syndetic_gap_bound(A, NAT)))
    assert tr.ps_to_diffgroup(A, G, F, NAT).valid
