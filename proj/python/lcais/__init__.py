"""Longest common almost-increasing subsequence solvers."""

from ._lcais import (
    BrokenChain,
    InstanceTooLarge,
    MatchPair,
    StatsRecord,
    Witness,
    WitnessEntry,
    brute_force_lcais,
    compute_l,
    compute_matches,
    count_compatible_pairs,
    generate,
    is_almost_increasing,
    is_subsequence,
    lcais_divide_conquer,
    lcais_reference,
    lcs,
    solve,
    sparse_lcais,
    validate_witness,
    witness_fault,
)

__all__ = [
    "BrokenChain",
    "InstanceTooLarge",
    "MatchPair",
    "StatsRecord",
    "Witness",
    "WitnessEntry",
    "brute_force_lcais",
    "compute_l",
    "compute_matches",
    "count_compatible_pairs",
    "generate",
    "is_almost_increasing",
    "is_subsequence",
    "lcais_divide_conquer",
    "lcais_reference",
    "lcs",
    "solve",
    "sparse_lcais",
    "validate_witness",
    "witness_fault",
]
