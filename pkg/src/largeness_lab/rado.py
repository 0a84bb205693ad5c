"""Partition regularity of ``Ax = b`` over finitely generated abelian groups.

``A`` is an integer ``k x n`` matrix acting on ``G^n``.  The system (with
``b != 0``) is partition regular over ``G`` exactly when it has a constant
solution ``x = (t, ..., t)``.  When it has none, this module builds the
explicit obstruction: a character ``phi: G^k -> R/Z`` vanishing on the
diagonal subgroup ``H = {A(t, ..., t)}`` with ``phi(b) != 0``, and a coloring
of ``G`` with at most ``d^n`` colors admitting no monochromatic solution.

All circle arithmetic uses :class:`fractions.Fraction` in turn units
(values in ``[0, 1)``).

>>> G = FGAbelianGroup.parse("Z_5")
>>> v = decide_partition_regular([[1, -1]], [1], G)
>>> v.regular, v.coloring.d, v.verification.ok
(False, 11, True)
"""

from __future__ import annotations

import itertools
import math
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence as Seq

import numpy as np
from sympy.ntheory.modular import solve_congruence

from .reports import Report
from .snf import smith_normal_form

DEFAULT_MAX_ENUM = 10**7


def max_enum() -> int:
    return int(os.environ.get("LARGENESS_LAB_MAX_ENUM", DEFAULT_MAX_ENUM))


class RadoError(ValueError):
    pass


class BZero(RadoError):
    """``b = 0``: homogeneous systems are outside the inhomogeneous theorem."""


class BInH(RadoError):
    """``b`` lies in the diagonal subgroup, so a constant solution exists."""


class EnumerationCap(RadoError):
    pass


@dataclass(frozen=True)
class FGAbelianGroup:
    """``Z^free_rank x Z_{m_1} x ... x Z_{m_s}``; elements are int tuples."""

    free_rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(m) for m in self.torsion))
        if self.free_rank < 0 or any(m < 2 for m in self.torsion):
            raise RadoError("need free rank >= 0 and torsion moduli >= 2")
        if self.dim == 0:
            raise RadoError("trivial group has no coordinates")

    @classmethod
    def parse(cls, text: str) -> FGAbelianGroup:
        """``Z``, ``Z_5``, ``Z^2``, ``Z_4xZ_6``, ``ZxZ_4``."""
        free, tors = 0, []
        for part in text.replace(" ", "").split("x"):
            m = re.fullmatch(r"Z(?:\^(\d+))?", part)
            if m:
                free += int(m.group(1) or 1)
                continue
            m = re.fullmatch(r"Z_(\d+)", part)
            if not m:
                raise RadoError(f"cannot parse group {text!r} at {part!r}")
            tors.append(int(m.group(1)))
        return cls(free, tuple(tors))

    def __str__(self) -> str:
        parts = (["Z"] if self.free_rank == 1 else [f"Z^{self.free_rank}"] if self.free_rank else [])
        return "x".join(parts + [f"Z_{m}" for m in self.torsion])

    @property
    def dim(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def moduli(self) -> tuple:
        """Per-coordinate modulus, 0 for free coordinates."""
        return (0,) * self.free_rank + self.torsion

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        return math.prod(self.torsion) if self.is_finite else None

    def element(self, x) -> tuple:
        cs = (x,) if isinstance(x, int) else tuple(x)
        if len(cs) != self.dim:
            raise RadoError(f"dimension mismatch: {x!r} in {self}")
        return tuple(int(c) % m if m else int(c) for c, m in zip(cs, self.moduli))

    def zero(self) -> tuple:
        return (0,) * self.dim

    def add(self, a, b) -> tuple:
        return self.element([x + y for x, y in zip(a, b)])

    def scale(self, k: int, a) -> tuple:
        return self.element([k * x for x in a])

    def elements(self, window: int = 0) -> list[tuple]:
        """All elements (finite) or those with free coordinates in ``[-window, window]``."""
        ranges = [range(-window, window + 1)] * self.free_rank + [range(m) for m in self.torsion]
        return [tuple(p) for p in itertools.product(*ranges)]

    def generators(self) -> list[tuple]:
        return [tuple(int(i == c) for i in range(self.dim)) for c in range(self.dim)]


def _matrix(A) -> tuple:
    rows = tuple(tuple(int(v) for v in r) for r in A)
    if not rows or not rows[0] or any(len(r) != len(rows[0]) for r in rows):
        raise RadoError("matrix must be a nonempty rectangular list of rows")
    return rows


def _vector(b, k: int, G: FGAbelianGroup) -> tuple:
    b = list(b)
    if len(b) != k:
        raise RadoError(f"b has {len(b)} entries, matrix has {k} rows")
    return tuple(G.element(v) for v in b)


def apply(A, x: Seq, G: FGAbelianGroup) -> tuple:
    """``A x`` for ``x`` in ``G^n``."""
    A = _matrix(A)
    return tuple(
        G.element([sum(a * xi[c] for a, xi in zip(row, x)) for c in range(G.dim)]) for row in A
    )


def row_sums(A) -> list[int]:
    return [sum(r) for r in _matrix(A)]


def _solve_linear_congruence(s: int, b: int, m: int):
    g = math.gcd(s, m)
    if b % g:
        return None
    mm = m // g
    if mm == 1:
        return (0, 1)
    return ((b // g) * pow(s // g, -1, mm) % mm, mm)


def solve_scalar(s: Seq[int], v: Seq[tuple], G: FGAbelianGroup) -> tuple | None:
    """Least ``t`` in ``G`` with ``s_i t = v_i`` for every row ``i``, coordinatewise."""
    t = []
    for c, m in enumerate(G.moduli):
        vc = [vi[c] for vi in v]
        if m == 0:
            nonzero = [(si, x) for si, x in zip(s, vc) if si]
            if any(x and not si for si, x in zip(s, vc)):
                return None
            if not nonzero:
                t.append(0)
                continue
            si, x = nonzero[0]
            if x % si:
                return None
            cand = x // si
            if any(sj * cand != y for sj, y in zip(s, vc)):
                return None
            t.append(cand)
        else:
            congr = []
            for si, x in zip(s, vc):
                sol = _solve_linear_congruence(si % m, x % m, m)
                if sol is None:
                    return None
                congr.append(sol)
            combined = solve_congruence(*congr) if congr else (0, 1)
            if combined is None:
                return None
            t.append(int(combined[0]) % m)
    return tuple(t)


def constant_solution(A, b, G: FGAbelianGroup) -> tuple | None:
    """``t`` with ``A (t, ..., t) = b``, i.e. ``(row sums) t = b``; ``None`` if none."""
    A = _matrix(A)
    return solve_scalar(row_sums(A), _vector(b, len(A), G), G)


@dataclass(frozen=True)
class DiagonalSubgroup:
    """``H = {A(t, ..., t) : t in G}`` generated by ``s * e_c`` for the
    coordinate generators ``e_c`` of ``G``."""

    row_sums: tuple
    group: FGAbelianGroup

    @property
    def generators(self) -> list[tuple]:
        G = self.group
        return [tuple(G.scale(si, e) for si in self.row_sums) for e in G.generators()]

    def contains(self, v) -> bool:
        return solve_scalar(self.row_sums, _vector(v, len(self.row_sums), self.group), self.group) is not None


def diagonal_subgroup(A, G: FGAbelianGroup) -> DiagonalSubgroup:
    return DiagonalSubgroup(tuple(row_sums(A)), G)


def _flatten(v: Seq[tuple]) -> list[int]:
    return [c for e in v for c in e]


@dataclass(frozen=True)
class Character:
    """``phi(v) = sum(coeffs_i * v_i) mod 1`` on the flattened coordinates of ``G^k``."""

    coeffs: tuple
    group: FGAbelianGroup
    k: int

    def __call__(self, v: Seq[tuple]) -> Fraction:
        return sum((c * x for c, x in zip(self.coeffs, _flatten(v))), Fraction(0)) % 1

    def torsion_well_defined(self) -> bool:
        mods = self.group.moduli * self.k
        return all(m == 0 or (c * m).denominator == 1 for c, m in zip(self.coeffs, mods))


def separating_character(H: DiagonalSubgroup, b, G: FGAbelianGroup | None = None) -> Character:
    """A character vanishing on ``H`` and nonzero at ``b``.

    ``G^k / H`` is presented as ``Z^N`` modulo the torsion relations of
    ``G^k`` and the generators of ``H``; its Smith form exhibits it as a
    product of cyclic groups.  Among the cyclic factors where ``b`` is
    nonzero, the one making ``phi(b)`` farthest from 0 is chosen (ties: first
    factor).  A finite factor ``Z_q`` maps by ``1 -> 1/q``; an infinite one
    where ``b`` has image ``m`` by ``1 -> 1/(2|m|)``.
    """
    G = G or H.group
    k = len(H.row_sums)
    bvec = _vector(b, k, G)
    if H.contains(bvec):
        raise BInH(f"b = {list(bvec)} lies in the diagonal subgroup")
    N = k * G.dim
    mods = G.moduli * k
    rels = [[m * int(i == j) for j in range(N)] for i, m in enumerate(mods) if m]
    rels += [_flatten(h) for h in H.generators]
    rels = [r for r in rels if any(r)]
    if rels:
        D, _, Q = smith_normal_form(rels)
        diag = [D[i][i] if i < len(D) else 0 for i in range(N)]
    else:
        Q = [[int(i == j) for j in range(N)] for i in range(N)]
        diag = [0] * N
    bflat = _flatten(bvec)
    best = None
    for j in range(N):
        bj = sum(bflat[i] * Q[i][j] for i in range(N))
        q = diag[j]
        if q == 1 or (q and bj % q == 0) or (not q and bj == 0):
            continue
        denom = q if q else 2 * abs(bj)
        val = Fraction(bj, denom) % 1
        dist = min(val, 1 - val)
        if best is None or dist > best[0]:
            best = (dist, j, denom)
    if best is None:
        raise RadoError("no separating coordinate found although b is outside H")
    _, j, denom = best
    return Character(tuple(Fraction(Q[i][j], denom) for i in range(N)), G, k)


def bucket(theta: Fraction, d: int) -> int:
    """Index ``j`` of the half-open arc ``[j/d, (j+1)/d)`` containing ``theta``."""
    if d < 1:
        raise RadoError("need d >= 1")
    return math.floor(Fraction(theta) % 1 * d)


def circle_dist(q: Fraction) -> Fraction:
    q = Fraction(q) % 1
    return min(q, 1 - q)


def choose_d(n: int, phi_b: Fraction) -> int:
    """Least ``d`` with ``n/d < dist(phi_b, 0)``."""
    dist = circle_dist(phi_b)
    if dist == 0:
        raise RadoError("phi(b) = 0 cannot be separated")
    return math.floor(Fraction(n) / dist) + 1


@dataclass
class Coloring:
    """``t -> (bucket(phi(c_1(t))), ..., bucket(phi(c_n(t))))`` with
    ``c_i(t) = A(0, ..., t, ..., 0)``."""

    A: tuple
    phi: Character
    d: int
    table: dict | None = None

    def __post_init__(self):
        self.A = _matrix(self.A)
        G = self.phi.group
        k, n = len(self.A), len(self.A[0])
        # weight of coordinate c of t in phi(c_i(t))
        self._w = [
            [sum(self.phi.coeffs[r * G.dim + c] * self.A[r][i] for r in range(k)) for c in range(G.dim)]
            for i in range(n)
        ]

    @property
    def n(self) -> int:
        return len(self.A[0])

    def phase(self, i: int, t: tuple) -> Fraction:
        """``phi(c_i(t))`` in ``[0, 1)``."""
        return sum((w * x for w, x in zip(self._w[i], t)), Fraction(0)) % 1

    def color_of(self, t) -> tuple:
        t = self.phi.group.element(t)
        if self.table is not None and t in self.table:
            return self.table[t]
        return tuple(bucket(self.phase(i, t), self.d) for i in range(self.n))

    def index_of(self, color: tuple) -> int:
        """Color tuple as an integer in ``[0, d^n)``."""
        return sum(c * self.d**i for i, c in enumerate(color))


def build_coloring(A, b, phi: Character, d: int) -> Coloring:
    col = Coloring(A, phi, d)
    G = phi.group
    if G.is_finite:
        col.table = {t: col.color_of(t) for t in G.elements()}
    return col


def _unit_pivot(A: tuple) -> tuple[int, int] | None:
    for j in range(len(A[0])):
        for r in range(len(A)):
            if abs(A[r][j]) == 1:
                return r, j
    return None


def solutions(A, b, G: FGAbelianGroup, domain: list[tuple], cap: int | None = None) -> Iterable[tuple]:
    """Every ``x`` in ``domain^n`` with ``Ax = b``.

    With a coefficient ``+-1`` in some column, that variable is solved for
    and the others enumerated; otherwise all of ``domain^n`` is scanned.
    """
    A = _matrix(A)
    k, n = len(A), len(A[0])
    bvec = _vector(b, k, G)
    cap = max_enum() if cap is None else cap
    pivot = _unit_pivot(A)
    free_vars = n - 1 if pivot else n
    if len(domain) ** free_vars > cap:
        raise EnumerationCap(f"{len(domain)}^{free_vars} candidates exceed the cap {cap}")
    dom = set(domain)
    if pivot is None:
        for x in itertools.product(domain, repeat=n):
            if apply(A, x, G) == bvec:
                yield x
        return
    r, j = pivot
    sign = A[r][j]
    others = [i for i in range(n) if i != j]
    for rest in itertools.product(domain, repeat=n - 1):
        x = [None] * n
        for i, v in zip(others, rest):
            x[i] = v
        acc = bvec[r]
        for i in others:
            acc = G.add(acc, G.scale(-A[r][i], x[i]))
        xj = G.scale(sign, acc)
        if xj not in dom:
            continue
        x[j] = xj
        x = tuple(x)
        if apply(A, x, G) == bvec:
            yield x


def _rep_diff_sum(col: Coloring, x: Seq[tuple]) -> Fraction:
    return sum((col.phase(i, x[i]) - col.phase(i, x[0]) for i in range(col.n)), Fraction(0))


def verify_no_mono_solution(A, b, coloring: Coloring, domain: list[tuple] | None = None,
                            cap: int | None = None) -> Report:
    """Exhaustively confirm that no solution in ``domain`` is monochromatic.

    For finite groups the report also bounds the difference sums of every
    monochromatic candidate (solution or not) by ``n/d``.
    """
    G = coloring.phi.group
    A = _matrix(A)
    if domain is None:
        if not G.is_finite:
            raise RadoError("infinite group needs an explicit window domain")
        domain = G.elements()
    cap = max_enum() if cap is None else cap
    n, d = len(A[0]), coloring.d
    rep = Report("no monochromatic solution")
    count, bad, violation = 0, 0, None
    for x in solutions(A, b, G, domain, cap):
        count += 1
        if len({coloring.color_of(e) for e in x}) == 1:
            bad += 1
            violation = violation or x
    rep.add("zero monochromatic solutions", violation is None, domain_size=len(domain),
            solutions_checked=count, violations=bad,
            violation=None if violation is None else [list(e) for e in violation])
    if G.is_finite:
        classes: dict = {}
        for t in domain:
            classes.setdefault(coloring.color_of(t), []).append(t)
        n_cand = sum(len(c) ** n for c in classes.values())
        if n_cand <= cap:
            bound = Fraction(n, d)
            worst = Fraction(0)
            for cls in classes.values():
                for x in itertools.product(cls, repeat=n):
                    worst = max(worst, abs(_rep_diff_sum(coloring, x)))
            rep.add("monochromatic difference sums below n/d", worst < bound, candidates=n_cand,
                    max_abs_sum=worst, bound=bound)
    return rep


@dataclass
class PRVerdict:
    regular: bool
    t: tuple | None = None
    phi: Character | None = None
    coloring: Coloring | None = None
    verification: Report | None = None
    notes: list = field(default_factory=list)


def decide_partition_regular(A, b, G: FGAbelianGroup, window: int = 50, cap: int | None = None) -> PRVerdict:
    """Regular with a constant solution, or not regular with a verified coloring.

    For infinite ``G`` the coloring is checked on free coordinates in
    ``[-window, window]``; the guarantee itself is the character argument
    and the window check corroborates it.
    """
    A = _matrix(A)
    bvec = _vector(b, len(A), G)
    if all(all(c == 0 for c in e) for e in bvec):
        raise BZero("b = 0 is outside the inhomogeneous setting")
    t = constant_solution(A, bvec, G)
    if t is not None:
        return PRVerdict(True, t=t)
    H = diagonal_subgroup(A, G)
    phi = separating_character(H, bvec, G)
    d = choose_d(len(A[0]), phi(bvec))
    col = build_coloring(A, bvec, phi, d)
    domain = G.elements() if G.is_finite else G.elements(window)
    rep = verify_no_mono_solution(A, bvec, col, domain, cap)
    notes = [] if G.is_finite else [f"window check on free coordinates in [-{window}, {window}]; "
                                   "the guarantee on all of G is the character argument"]
    return PRVerdict(False, phi=phi, coloring=col, verification=rep, notes=notes)


def brute_force_pr(A, b, G: FGAbelianGroup, r: int, cap: int | None = None, chunk: int = 1 << 16) -> bool:
    """Whether every coloring ``G -> [0, r)`` has a monochromatic solution."""
    if not G.is_finite:
        raise RadoError("brute force needs a finite group")
    cap = max_enum() if cap is None else cap
    elems = G.elements()
    size = len(elems)
    if r**size > cap:
        raise EnumerationCap(f"{r}^{size} colorings exceed the cap {cap}")
    pos = {e: i for i, e in enumerate(elems)}
    sols = np.array([[pos[e] for e in x] for x in solutions(A, b, G, elems, cap)], dtype=np.int64)
    if sols.size == 0:
        return False
    powers = r ** np.arange(size, dtype=np.int64)
    total = r**size
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        colorings = (idx[:, None] // powers) % r
        cols = colorings[:, sols]
        mono = (cols == cols[:, :, :1]).all(axis=2).any(axis=1)
        if not mono.all():
            return False
    return True


def coloring_is_avoiding(A, b, G: FGAbelianGroup, colors: dict) -> bool:
    """Whether the explicit coloring ``colors`` avoids monochromatic solutions.

    Scans every monochromatic vector directly, independent of :func:`solutions`.
    """
    A = _matrix(A)
    bvec = _vector(b, len(A), G)
    classes: dict = {}
    for e in G.elements():
        classes.setdefault(colors[e], []).append(e)
    return not any(apply(A, x, G) == bvec for cls in classes.values()
                   for x in itertools.product(cls, repeat=len(A[0])))
