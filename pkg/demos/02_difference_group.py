#!/usr/bin/env python3
"""Carrying witnesses from S to S - S and along homomorphisms.

Each transformer returns the new witness together with the intermediate
values it used; the target validator rechecks the result from scratch."""
from largeness_lab import transport as tr
from largeness_lab import Sequence, evens, cofinite, multiples, Full
from largeness_lab.homs import parse_hom, image_set
from largeness_lab.semigroups import Ambient, DiffPair

N, Z = Ambient.naturals(), Ambient.integers()

# thick in N gives thick in N - N = Z
cert = tr.thick_to_diffgroup(cofinite(10), [DiffPair(3, 5), DiffPair(7, 2)], N)
print(cert.theorem, cert.trace, "->", cert.target.shift, "valid:", cert.valid)

# piecewise syndetic: the union of translates is thick, so the same translates work in Z
cert = tr.ps_to_diffgroup(multiples(4), [0, 1, 2, 3], range(-5, 6), N)
print(cert.theorem, "translates", cert.target.translates, "valid:", cert.valid)

# J-set: f(t) = t - 2t, shifted into N by g(t) = 2t
fam = [tr.PairSequence(Sequence.linear(1), Sequence.linear(2))]
cert = tr.jset_to_diffgroup(evens(), fam, N)
t = cert.trace
print(f"oracle a={t['oracle_a']} K={t['K']} b={t['b']} values={t['values']} valid: {cert.valid}")

# along n -> n mod 6: image of 2Z with translates {0, 1}
phi = parse_hom("mod:6", Z)
A = multiples(2, two_sided=True)
cert = tr.ps_under_hom(phi, A, tr.ps_oracle(A, [0, 1], Z),
                       tr.ps_oracle(image_set(phi, Full(Z)), [0], phi.target), range(6))
print(cert.theorem, "translates", cert.target.translates, "valid:", cert.valid)

# J-sets along n -> 2n: the flat witness lands in 2N
cert = tr.jset_under_hom(parse_hom("scale:2", N), Full(N), [Sequence.constant(1, 12)], t_range=6)
print(cert.theorem, cert.target, "valid:", cert.valid)
