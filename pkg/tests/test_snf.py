from hypothesis import given, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from largeness_lab.snf import diagonal, smith_normal_form


def _mul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


mats = st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)))


@given(mats)
def test_snf_matches_sympy(M):
    D, P, Q = smith_normal_form(M)
    assert _mul(_mul(P, M), Q) == D
    ours = [abs(x) for x in diagonal(D)]
    ref = Matrix(M)
    theirs = [abs(x) for x in diagonal(sympy_snf(ref, domain=ZZ).tolist())]
    assert ours == theirs
    nz = [x for x in ours if x]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


def test_snf_small():
    D, _, _ = smith_normal_form([[2, 4], [6, 8]])
    assert [abs(x) for x in diagonal(D)] == [2, 4]
