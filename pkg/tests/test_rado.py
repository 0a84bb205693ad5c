import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from largeness_lab.rado import (
    BInH, BZero, EnumerationCap, FGAbelianGroup, RadoError, apply, brute_force_pr, bucket, build_coloring,
    choose_d, circle_dist, coloring_is_avoiding, constant_solution, decide_partition_regular, diagonal_subgroup,
    separating_character, solutions, verify_no_mono_solution,
)

GZ = FGAbelianGroup(1, ())


def cyc(*m):
    return FGAbelianGroup(0, tuple(m))


def test_group_parse():
    assert str(FGAbelianGroup.parse("Z_4xZ_6")) == "Z_4xZ_6"
    assert FGAbelianGroup.parse("Z^2").dim == 2
    assert FGAbelianGroup.parse("Z_5").order == 5


def test_constant_solution_examples():
    assert constant_solution([[1, 1]], [2], GZ) == (1,)
    assert constant_solution([[1, -1]], [1], GZ) is None
    assert constant_solution([[2]], [3], cyc(5)) == (4,)


def test_diagonal_subgroup_examples():
    assert not diagonal_subgroup([[1, -1]], GZ).contains([1])
    assert diagonal_subgroup([[1, -1]], GZ).contains([0])
    H = diagonal_subgroup([[1, 1]], GZ)
    assert H.contains([4]) and not H.contains([3])
    H = diagonal_subgroup([[1], [2]], cyc(4))
    members = {(a, b) for a in range(4) for b in range(4) if H.contains([(a,), (b,)])}
    assert members == {(0, 0), (1, 2), (2, 0), (3, 2)}


def test_separating_character_examples():
    phi = separating_character(diagonal_subgroup([[1, -1]], GZ), [1], GZ)
    assert phi.coeffs == (Fraction(1, 2),) and phi([(1,)]) == Fraction(1, 2)
    G4 = cyc(4)
    H = diagonal_subgroup([[2]], G4)
    phi = separating_character(H, [1], G4)
    assert phi([(2,)]) == 0 and phi([(1,)]) == Fraction(1, 2)
    with pytest.raises(BInH):
        separating_character(H, [2], G4)


def test_bucket_and_choose_d_examples():
    assert bucket(Fraction(0), 4) == 0
    assert bucket(Fraction(3, 8), 4) == 1
    assert bucket(Fraction(7, 8), 8) == 7
    assert choose_d(2, Fraction(1, 2)) == 5
    assert choose_d(1, Fraction(1, 2)) == 3
    assert choose_d(3, Fraction(1, 4)) == 13


fracs = st.fractions(min_value=0, max_value=1).filter(lambda q: 0 < q < 1)


@given(st.integers(1, 6), fracs)
def test_choose_d_is_least_with_bound(n, q):
    d = choose_d(n, q)
    assert Fraction(n, d) < circle_dist(q)
    assert d == 1 or not Fraction(n, d - 1) < circle_dist(q)


@given(fracs, st.integers(1, 40))
def test_bucket_interval(q, d):
    j = bucket(q, d)
    assert 0 <= j < d and Fraction(j, d) <= q < Fraction(j + 1, d)


def test_coloring_examples():
    G = cyc(5)
    v = decide_partition_regular([[1, -1]], [1], G)
    col = v.coloring
    assert col.color_of((0,)) == (0, 0)
    for t in range(5):
        expect = (bucket(v.phi.coeffs[0] * t % 1, col.d), bucket(-v.phi.coeffs[0] * t % 1, col.d))
        assert col.color_of((t,)) == expect


def test_verify_examples():
    G = cyc(5)
    v = decide_partition_regular([[1, -1]], [1], G)
    det = v.verification.checks[0].detail
    assert det["solutions_checked"] == 5 and det["violations"] == 0
    phi = separating_character(diagonal_subgroup([[1, -1]], GZ), [1], GZ)
    col = build_coloring([[1, 1]], [2], phi, 5)
    rep = verify_no_mono_solution([[1, 1]], [2], col, GZ.elements(3))
    assert not rep.ok and rep.checks[0].detail["violations"] > 0
    assert col.color_of((1,)) == col.color_of((1,))  # x = (1, 1) is a monochromatic solution
    phi0 = separating_character(diagonal_subgroup([[0]], GZ), [1], GZ)
    assert verify_no_mono_solution([[0]], [1], build_coloring([[0]], [1], phi0, 3), GZ.elements(5)).ok


def test_decide_examples():
    assert decide_partition_regular([[1, 1]], [2], GZ).t == (1,)
    v = decide_partition_regular([[1, -1]], [1], cyc(5))
    assert not v.regular and v.verification.ok
    assert decide_partition_regular([[2]], [3], cyc(5)).t == (4,)
    with pytest.raises(BZero):
        decide_partition_regular([[1, 1]], [0], GZ)


def test_infinite_group_records_window_note():
    v = decide_partition_regular([[1, -1]], [1], GZ, window=30)
    assert not v.regular and v.verification.ok and v.notes


def test_brute_force_examples():
    assert brute_force_pr([[1, 1]], [2], cyc(3), 2)
    assert not brute_force_pr([[1, -1]], [1], cyc(4), 2)
    # one color: regular exactly when a solution exists
    assert brute_force_pr([[1, 1]], [1], cyc(2), 1)
    assert not brute_force_pr([[2, 2]], [1], cyc(4), 1)
    with pytest.raises(RadoError):
        cyc(1)
    with pytest.raises(RadoError):
        brute_force_pr([[1, 1]], [2], GZ, 2)


def test_enumeration_cap(monkeypatch):
    with pytest.raises(EnumerationCap):
        brute_force_pr([[1, 1]], [2], cyc(7), 3, cap=100)
    monkeypatch.setenv("LARGENESS_LAB_MAX_ENUM", "10")
    with pytest.raises(EnumerationCap):
        brute_force_pr([[1, 1]], [2], cyc(5), 2)


def _naive_solutions(A, b, G):
    elems = G.elements()
    bvec = tuple(G.element(x) for x in b)
    return sorted(x for x in itertools.product(elems, repeat=len(A[0])) if apply(A, x, G) == bvec)


@given(st.sampled_from([2, 3, 4, 6]), st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2),
                                            min_size=1, max_size=2), st.data())
def test_solutions_match_naive(m, A, data):
    G = cyc(m)
    b = [data.draw(st.integers(0, m - 1)) for _ in A]
    assert sorted(solutions(A, b, G, G.elements())) == _naive_solutions(A, b, G)


matrices = st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2), min_size=1, max_size=2)


@given(st.sampled_from([2, 3, 4, 5, 6, 7]), matrices, st.data())
def test_verdict_soundness(m, A, data):
    G = cyc(m)
    b = [data.draw(st.integers(0, m - 1)) for _ in A]
    if not any(b):
        return
    v = decide_partition_regular(A, b, G)
    if v.regular:
        assert apply(A, [v.t] * len(A[0]), G) == tuple((x,) for x in b)
    else:
        assert coloring_is_avoiding(A, b, G, v.coloring.table)
        phi = v.phi
        assert all(phi(g) == 0 for g in diagonal_subgroup(A, G).generators)
        assert phi([(x,) for x in b]) != 0


@given(st.sampled_from([(0, (4, 6)), (1, (3,)), (2, ())]), st.data())
def test_character_on_products(shape, data):
    G = FGAbelianGroup(*shape)
    A = data.draw(matrices)
    b = [tuple(data.draw(st.integers(-4, 4)) for _ in range(G.dim)) for _ in A]
    H = diagonal_subgroup(A, G)
    if H.contains(b) or not any(any(x) for x in b):
        return
    phi = separating_character(H, b, G)
    assert phi.torsion_well_defined()
    assert all(phi(g) == 0 for g in H.generators) and phi(b) != 0


def test_decision_is_deterministic():
    a = decide_partition_regular([[1, 2], [2, -1]], [1, 3], cyc(6))
    b = decide_partition_regular([[1, 2], [2, -1]], [1, 3], cyc(6))
    assert a.regular == b.regular and a.phi == b.phi and a.coloring.table == b.coloring.table
