import pytest

from largeness_lab.dsl import DSLError, parse_family, parse_int_list, parse_pair_family, parse_query
from largeness_lab.semigroups import Ambient

N, N2 = Ambient.naturals(), Ambient.naturals(2)


def test_queries():
    assert parse_query("0,4..6, 2", N) == (0, 4, 5, 6, 2)
    assert parse_query("-2..1", N) == (-2, -1, 0, 1)
    assert parse_query("1,0;0,1", N2) == ((1, 0), (0, 1))
    assert parse_query("3,3,3", N) == (3,)


def test_query_error_names_token_and_position():
    with pytest.raises(DSLError, match=r"'x7' at position 4"):
        parse_query("1,2,x7", N)
    with pytest.raises(DSLError, match="coordinate"):
        parse_query("1,2,3", N2)


def test_sequences():
    fam = parse_family("const:2; linear:3:1; values:4|5; cycle:1|2", N)
    assert fam[0](5) == 2 and fam[1](2) == 7
    assert fam[2].prefix == (4, 5)
    assert [fam[3](t) for t in range(1, 6)] == [1, 2, 1, 2, 1]


def test_sequence_errors():
    with pytest.raises(DSLError, match="expected const"):
        parse_family("const:1;sine:2", N)
    with pytest.raises(DSLError, match="position 8"):
        parse_family("const:1;linear:q", N)


def test_pairs():
    (p,) = parse_pair_family("linear:1/linear:2", N)
    assert p.plus(3) == 3 and p.minus(3) == 6
    with pytest.raises(DSLError, match="PLUS/MINUS"):
        parse_pair_family("linear:1", N)


def test_int_list():
    assert parse_int_list("1, -2,3") == (1, -2, 3)
    with pytest.raises(DSLError):
        parse_int_list("1,,2")
