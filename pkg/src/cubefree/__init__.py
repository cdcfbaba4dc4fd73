"""Cube-free words over finite alphabets.

Detection and enumeration of cube-free words, the Thue-Morse word and its
factor structure, uniformity and marker analysis, certified extendability
decisions with explicit infinite extensions, and transition words joining
two cube-free words.
"""

from .words import (
    Alphabet,
    CubeWitness,
    PeriodicSuffix,
    append_check,
    find_cube,
    fine_wilf_period,
    is_cube_free,
    max_periodic_suffix,
    reverse,
)
from .thue_morse import (
    complement,
    find_occurrence_after,
    is_tm_factor,
    splice_pattern,
    tm_prefix,
    tm_range,
)
from .analysis import (
    MARKERS,
    Marker,
    MarkerFactorization,
    Occurrence,
    c_letter_positions,
    factorize,
    is_right_aligned,
    is_uniform,
    non_uniform_witness,
    scan_markers,
)
from .extend import (
    ExtendabilityVerdict,
    NotExtendableError,
    TailCertificate,
    algorithm2,
    chain_length_audit,
    is_left_extendable,
    is_right_extendable,
    log_bound,
    t_extend_uniform,
    t_extend_with_uniform_context,
)
from .transition import (
    TransitionMethod,
    TransitionResult,
    construct_transition,
    splice,
    transition_dary,
    transition_exists,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "CubeWitness",
    "PeriodicSuffix",
    "append_check",
    "find_cube",
    "fine_wilf_period",
    "is_cube_free",
    "max_periodic_suffix",
    "reverse",
    "complement",
    "find_occurrence_after",
    "is_tm_factor",
    "splice_pattern",
    "tm_prefix",
    "tm_range",
    "MARKERS",
    "Marker",
    "MarkerFactorization",
    "Occurrence",
    "c_letter_positions",
    "factorize",
    "is_right_aligned",
    "is_uniform",
    "non_uniform_witness",
    "scan_markers",
    "ExtendabilityVerdict",
    "NotExtendableError",
    "TailCertificate",
    "algorithm2",
    "chain_length_audit",
    "is_left_extendable",
    "is_right_extendable",
    "log_bound",
    "t_extend_uniform",
    "t_extend_with_uniform_context",
    "TransitionMethod",
    "TransitionResult",
    "construct_transition",
    "splice",
    "transition_dary",
    "transition_exists",
]
