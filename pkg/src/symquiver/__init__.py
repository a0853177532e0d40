"""Symmetric type A quiver orbits and Zelevinsky permutations."""

from .linalg import IntMatrix, RankMatrix, block_rank_matrix, nw_rank_matrix, rank
from .perms import (Permutation, PermutationError, alpha, bruhat_leq, diagrams,
                    essential_set, fpf_involutions, involutions, parse_permutation,
                    rothe_diagram, signed_matrix)
from .poset import (OrbitPoset, VerificationReport, degeneration_poset, export_poset,
                    p_orbit_leq, verify_dictionary)
from .quiver import (Interval, QuiverError, SymQuiverA, bipartite_reduce, check_dims,
                     make_quiver, quiver_from_arrows)
from .reps import (IntervalFunction, Representation, enumerate_symmetric_orbits,
                   interval_rank_vector, multiplicities_from_ranks, orbit_rank_vector,
                   psi, rep_from_multiplicities, sym_zelevinsky_map, symmetric_embed,
                   zelevinsky_matrix)
from .zelevinsky import (image_set, ranks_from_permutation, sym_zelevinsky_permutation,
                         v_max, zelevinsky_permutation)

__version__ = "0.1.0"

__all__ = [
    "IntMatrix", "RankMatrix", "block_rank_matrix", "nw_rank_matrix", "rank",
    "Permutation", "PermutationError", "alpha", "bruhat_leq", "diagrams", "essential_set",
    "fpf_involutions", "involutions", "parse_permutation", "rothe_diagram", "signed_matrix",
    "OrbitPoset", "VerificationReport", "degeneration_poset", "export_poset", "p_orbit_leq",
    "verify_dictionary",
    "Interval", "QuiverError", "SymQuiverA", "bipartite_reduce", "check_dims", "make_quiver",
    "quiver_from_arrows",
    "IntervalFunction", "Representation", "enumerate_symmetric_orbits", "interval_rank_vector",
    "multiplicities_from_ranks", "orbit_rank_vector", "psi", "rep_from_multiplicities",
    "sym_zelevinsky_map", "symmetric_embed", "zelevinsky_matrix",
    "image_set", "ranks_from_permutation", "sym_zelevinsky_permutation", "v_max",
    "zelevinsky_permutation",
]
