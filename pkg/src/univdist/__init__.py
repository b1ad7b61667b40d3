"""Minimal insertions, deletions or substitutions to reach a target universality index."""

from ._backend import ACTIVE as _ACTIVE
from .distances import (DistanceResult, InfeasibleTarget, binary_insert_distance, delete_distance,
                        distance, insert_distance, insert_profile, subst_distance)
from .structures import INF, IntervalUnionFind, MinSuffixList, RmqIndex, StructureError
from .tables import deletion_tables, prefix_distinct, sampled_last_d, window_distinct
from .witness import (BoundarySolution, Verdict, WitnessWord, delete_witness, full_matrix_boundaries,
                      hirschberg_boundaries, insert_witness, subst_witness, verify, witness)
from .word import (AlphabetMap, ArchFactorization, Word, WordError, arch_factorize, is_k_universal,
                   normalize, restore, restore_text, universality_index)

BACKEND = _ACTIVE.NAME

__all__ = [
    "AlphabetMap", "ArchFactorization", "BACKEND", "BoundarySolution", "DistanceResult", "INF",
    "InfeasibleTarget", "IntervalUnionFind", "MinSuffixList", "RmqIndex", "StructureError", "Verdict",
    "WitnessWord", "Word", "WordError", "arch_factorize", "binary_insert_distance", "delete_distance",
    "delete_witness", "deletion_tables", "distance", "full_matrix_boundaries", "hirschberg_boundaries",
    "insert_distance", "insert_profile", "insert_witness", "is_k_universal", "normalize",
    "prefix_distinct", "restore", "restore_text", "sampled_last_d", "subst_distance", "subst_witness",
    "universality_index", "verify", "window_distinct", "witness",
]
