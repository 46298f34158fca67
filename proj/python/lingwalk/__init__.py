"""Coined discrete-time quantum walks that accept formal languages."""

from ._lingwalk import (
    Walk,
    __version__,
    build_sequential,
    build_sequential_word,
    build_spatial,
    complement,
    conveyor_coin,
    discrimination_success,
    enumerate_strings,
    grover_coin,
    hadamard_merge_coin,
    jaro,
    membership,
    reference_word,
    run_quantum,
    run_word,
    superpose_words,
    target_word,
    verify_unitarity,
)

__all__ = [
    "Walk",
    "__version__",
    "build_sequential",
    "build_sequential_word",
    "build_spatial",
    "complement",
    "conveyor_coin",
    "discrimination_success",
    "enumerate_strings",
    "grover_coin",
    "hadamard_merge_coin",
    "jaro",
    "membership",
    "reference_word",
    "run_quantum",
    "run_word",
    "superpose_words",
    "target_word",
    "verify_unitarity",
]
