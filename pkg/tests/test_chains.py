import pytest

from largeness_lab.chains import (
    C_SET, CENTRAL, CheckConfig, DirectedFamily, QUASI_CENTRAL, check_directed_family, constant_table,
    cwps_queries, search_cwps_table, validate_cwps,
)
from largeness_lab.largeness import NAT
from largeness_lab.sets import EventuallyPeriodic, FiniteSet, Full, evens, multiples


def even_chain(kind):
    return DirectedFamily.chain({F: EventuallyPeriodic("10", offset=2 * F) for F in (1, 2, 3)}, kind=kind)


def test_table_examples():
    fam = DirectedFamily.chain({0: Full(NAT)})
    t = constant_table([Full(NAT)], [0], 0)
    assert validate_cwps(t, cwps_queries(fam, CheckConfig(queries=[(0, 3, 9)]))).ok
    t = constant_table([evens(), multiples(4)], [0, 1, 2, 3], 0)
    fam = DirectedFamily.chain({0: evens(), 1: multiples(4)})
    assert validate_cwps(t, cwps_queries(fam, CheckConfig(queries=[tuple(range(21))]))).ok


def test_table_violation_names_element():
    t = constant_table([evens()], [0], 1)
    rep = validate_cwps(t, [({0}, {0}, (0, 1))])
    assert not rep.ok
    assert rep.checks[0].detail["violating"] == 1


def test_query_outside_family_rejected():
    t = constant_table([evens()], [0], 0)
    with pytest.raises(ValueError):
        validate_cwps(t, [({1}, {0}, (0,))])


def test_search_table_validates():
    t = search_cwps_table([evens(), multiples(4)], [(0, 1, 2, 3)], 4, 60)
    fam = DirectedFamily.chain({0: evens(), 1: multiples(4)})
    assert validate_cwps(t, cwps_queries(fam, CheckConfig())).ok


@pytest.mark.parametrize("kind", [QUASI_CENTRAL, CENTRAL, C_SET])
def test_even_chain_passes(kind):
    assert check_directed_family(even_chain(kind), NAT, CheckConfig(), evens()).ok


def test_singleton_full_family():
    assert check_directed_family(DirectedFamily.chain({0: Full(NAT)}, kind=CENTRAL)).ok


def test_singletons_fail_nesting():
    fam = DirectedFamily.chain({F: FiniteSet(frozenset({F})) for F in (1, 2, 3)})
    rep = check_directed_family(fam)
    assert not rep.ok
    failed = {c.name for c in rep.failures()}
    assert "downward nested (F >= G implies C_F inside C_G)" in failed


def test_family_outside_set_is_reported():
    rep = check_directed_family(even_chain(QUASI_CENTRAL), NAT, CheckConfig(), multiples(4))
    assert "every C_F inside A" in {c.name for c in rep.failures()}
