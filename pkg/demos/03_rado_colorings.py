#!/usr/bin/env python3
"""Partition regularity of Ax = b: a constant solution, or a coloring
built from a character that separates b from the diagonal subgroup."""
import numpy as np

from largeness_lab.rado import FGAbelianGroup, decide_partition_regular, brute_force_pr

Z, Z5 = FGAbelianGroup.parse("Z"), FGAbelianGroup.parse("Z_5")

v = decide_partition_regular([[1, 1]], [2], Z)
print("x1 + x2 = 2 over Z: regular, t =", v.t)

# x1 - x2 = 1 over Z_5 has no constant solution
v = decide_partition_regular([[1, -1]], [1], Z5)
print("phi coefficients:", v.phi.coeffs, "d =", v.coloring.d)
for t, c in sorted(v.coloring.table.items()):
    print("  color", t, "->", c)
print(v.verification)
print("brute force, 2 colors:", brute_force_pr([[1, -1]], [1], Z5, 2))

# over Z the same coloring is checked on a window; neighbours never share a color
v = decide_partition_regular([[1, -1]], [1], Z, window=200)
colors = np.array([v.coloring.index_of(v.coloring.color_of(x)) for x in range(-200, 201)])
print("distinct colors on [-200, 200]:", len(set(colors.tolist())),
      "| equal neighbours:", int((colors[1:] == colors[:-1]).sum()))
