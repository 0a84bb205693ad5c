import pytest
from hypothesis import given, strategies as st

from largeness_lab.semigroups import (
    Ambient, AmbientError, DiffPair, DifferenceGroup, diff_add, diff_eq, diff_normalize, embed,
)

N, Z, N2 = Ambient.naturals(), Ambient.integers(), Ambient.naturals(2)
nat = st.integers(0, 200)
pair = st.builds(DiffPair, nat, nat)
pair2 = st.builds(DiffPair, st.tuples(nat, nat), st.tuples(nat, nat))


def test_embed_examples():
    assert embed(3, 5, N) == DiffPair(8, 5)
    assert diff_normalize(embed(3, 5, N), N) == DiffPair(3, 0)
    assert diff_eq(embed(0, 9, N), DiffPair(0, 0), N)
    p = embed((2, 1), (4, 4), N2)
    assert p == DiffPair((6, 5), (4, 4))
    assert diff_normalize(p, N2) == DiffPair((2, 1), (0, 0))


def test_add_and_normalize_examples():
    assert diff_eq(diff_add(DiffPair(3, 0), DiffPair(0, 3), N), DiffPair(0, 0), N)
    assert diff_eq(diff_add(DiffPair(5, 2), DiffPair(1, 4), N), DiffPair(0, 0), N)
    assert diff_normalize(DiffPair(8, 5), N) == DiffPair(3, 0)
    assert diff_normalize(DiffPair(5, 8), N) == DiffPair(0, 3)


def test_dimension_mismatch():
    with pytest.raises(AmbientError):
        embed((1, 2), 3, N2)


@pytest.mark.parametrize("text", ["N", "Z", "N^2", "Z^3", "Z_6", "Z_4xZ_6"])
def test_ambient_parse_roundtrip(text):
    assert str(Ambient.parse(text)) == text


def test_ambient_parse_error():
    with pytest.raises(AmbientError):
        Ambient.parse("Q")


@given(pair, pair, pair)
def test_group_laws(p, q, r):
    D = DifferenceGroup(N)
    assert D.eq(D.add(p, q), D.add(q, p))
    assert D.eq(D.add(D.add(p, q), r), D.add(p, D.add(q, r)))
    assert D.eq(D.add(p, D.neg(p)), D.zero())
    assert D.normalize(D.normalize(p)) == D.normalize(p)


@given(pair2, pair2)
def test_group_laws_dim2(p, q):
    D = DifferenceGroup(N2)
    assert D.eq(D.add(p, q), D.add(q, p))
    assert D.eq(D.add(p, D.neg(p)), D.zero())


@given(nat, nat, nat)
def test_embed_is_homomorphism(a, b, base):
    lhs = diff_add(embed(a, base, N), embed(b, base, N), N)
    assert diff_eq(lhs, embed(a + b, base, N), N)


def test_naturals_difference_is_integers():
    # canonical pairs (n, 0) / (0, n) map bijectively onto [-100, 100]
    D = DifferenceGroup(N)
    canon = {D.normalize(DiffPair(a, b)) for a in range(101) for b in range(101)}
    canon = {p for p in canon if abs(p.plus - p.minus) <= 100}
    values = sorted(p.plus - p.minus for p in canon)
    assert values == list(range(-100, 101))
    for p in canon:
        for q in canon:
            s = D.normalize(D.add(p, q))
            assert s.plus - s.minus == (p.plus - p.minus) + (q.plus - q.minus)
