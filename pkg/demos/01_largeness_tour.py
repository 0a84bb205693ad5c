#!/usr/bin/env python3
"""Thick, syndetic and piecewise syndetic sets on a few eventually periodic
examples, with the witnesses the searches return."""
import numpy as np

from largeness_lab import evens, cofinite, multiples, EventuallyPeriodic, Sequence
from largeness_lab import is_thick_exact, syndetic_gap_bound, thick_witness, ps_witness
from largeness_lab import j_witness_commutative, j_witness_general
from largeness_lab.semigroups import Ambient

N, Z = Ambient.naturals(), Ambient.integers()

# The even numbers: syndetic in N with gap 2, never thick,
# and not syndetic once we look at them inside Z (nothing below 0).
print("gap of 2N in N:", syndetic_gap_bound(evens(), N))
print("gap of 2N in Z:", syndetic_gap_bound(evens(), Z))
print("2N thick?", is_thick_exact(evens()))

# A cofinite set is thick: every finite F can be pushed inside it.
A = cofinite(10)
print("shift for {-2, 5} into [10, oo) over Z:", thick_witness(A, [-2, 5], 100, Z).shift)

# Membership masks are plain numpy arrays, so window statistics are cheap.
B = EventuallyPeriodic("1101000", offset=3, removed={5})
mask = B.mask(0, 70)
print("density of", B.describe(), "on [0, 70):", round(mask.mean(), 3))
print("longest gap in the window:", int(np.diff(np.flatnonzero(mask)).max()) - 1)
print("gap bound:", syndetic_gap_bound(B, N))

# Piecewise syndetic: a few translates of 4N cover any finite window.
G, x = ps_witness(multiples(4), list(range(12)), 4, 50)
print("4N: translates", G, "shift", x)

# J-sets: one shift a and one index set K serve the whole family.
fam = [Sequence.constant(0, 6), Sequence.constant(1, 6), Sequence.linear(1, 0, 6)]
w = j_witness_commutative(evens(), fam, 8, 3)
print("2N J-witness for {0, 1, t}:", w, "sums", [w.a + sum(f(t) for t in w.K) for f in fam])
print("general form for {1}:", j_witness_general(evens(), [Sequence.constant(1)], 3, 2, 4))
