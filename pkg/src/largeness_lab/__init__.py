"""Largeness notions in commutative semigroups, witness transport to the
difference group and along homomorphisms, and partition regularity of
``Ax = b`` over finitely generated abelian groups."""

from .semigroups import Ambient, DiffPair, DifferenceGroup, diff_add, diff_eq, diff_normalize, embed
from .sets import EventuallyPeriodic, FiniteSet, Full, Window, cofinite, evens, multiples, parse_set
from .largeness import (
    Sequence,
    is_thick_exact,
    j_witness_commutative,
    j_witness_general,
    ps_witness,
    syndetic_gap_bound,
    thick_witness,
    x_product,
)
from .rado import FGAbelianGroup, brute_force_pr, decide_partition_regular

__version__ = "0.1.0"

__all__ = [
    "Ambient", "DiffPair", "DifferenceGroup", "diff_add", "diff_eq", "diff_normalize", "embed",
    "EventuallyPeriodic", "FiniteSet", "Full", "Window", "cofinite", "evens", "multiples", "parse_set",
    "Sequence", "is_thick_exact", "j_witness_commutative", "j_witness_general", "ps_witness",
    "syndetic_gap_bound", "thick_witness", "x_product",
    "FGAbelianGroup", "brute_force_pr", "decide_partition_regular",
]
