"""Smith normal form over the integers with unimodular transforms."""

from __future__ import annotations


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(M: list[list[int]]) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Return ``(D, P, Q)`` with ``P @ M @ Q == D``.

    ``P`` and ``Q`` are unimodular, ``D`` is diagonal with nonnegative
    entries and each diagonal entry divides the next.  Zero-row input gives
    empty ``D`` and ``P`` with ``Q`` the identity.
    """
    rows = len(M)
    cols = len(M[0]) if rows else 0
    A = [list(map(int, r)) for r in M]
    P, Q = _identity(rows), _identity(cols)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        P[i], P[j] = P[j], P[i]

    def swap_cols(i, j):
        for R in A:
            R[i], R[j] = R[j], R[i]
        for R in Q:
            R[i], R[j] = R[j], R[i]

    def add_row(dst, src, k):  # row dst += k * row src
        A[dst] = [a + k * b for a, b in zip(A[dst], A[src])]
        P[dst] = [a + k * b for a, b in zip(P[dst], P[src])]

    def add_col(dst, src, k):  # col dst += k * col src
        for R in A:
            R[dst] += k * R[src]
        for R in Q:
            R[dst] += k * R[src]

    for k in range(min(rows, cols)):
        while True:
            nz = [(abs(A[i][j]), i, j) for i in range(k, rows) for j in range(k, cols) if A[i][j]]
            if not nz:
                return A, P, Q
            _, i, j = min(nz)
            swap_rows(k, i)
            swap_cols(k, j)
            p = A[k][k]
            clean = True
            for i in range(k + 1, rows):
                if A[i][k]:
                    add_row(i, k, -(A[i][k] // p))
                    clean &= A[i][k] == 0
            for j in range(k + 1, cols):
                if A[k][j]:
                    add_col(j, k, -(A[k][j] // p))
                    clean &= A[k][j] == 0
            if not clean:
                continue
            bad = next((i for i in range(k + 1, rows) for j in range(k + 1, cols) if A[i][j] % p), None)
            if bad is None:
                break
            add_row(k, bad, 1)
        if A[k][k] < 0:
            A[k] = [-a for a in A[k]]
            P[k] = [-a for a in P[k]]
    return A, P, Q


def diagonal(D: list[list[int]]) -> list[int]:
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]
