"""Exact spectral analysis of card shuffles driven by Jucys-Murphy
transposition sets, including the k-star interpolation between star and
random transpositions: closed-form eigenvalues and multiplicities,
total-variation bounds, cutoff curves, limit-profile comparisons, and a
brute-force oracle that verifies all of them at small deck sizes."""

from .errors import CapacityError, DegenerateSpecError
from .mixing import (
    CharacterExpectations,
    DegenerateBoundError,
    MixingCurve,
    character_expectations,
    chebyshev_threshold,
    cutoff_step,
    cutoff_time,
    l2_upper_bound,
    l2_upper_bound_kstar,
    limit_profile,
    poisson_tv,
    profile_comparison_bound,
    variance_lower_bound,
)
from .partitions import (
    Partition,
    SkewShape,
    contains,
    count_partitions,
    diag_index,
    dim_skew,
    dim_syt,
    dim_upper_bound,
    dominates,
    enumerate_partitions,
    enumerate_subpartitions,
    hardy_ramanujan_estimate,
    skew_dim_bound_check,
)
from .spectrum import (
    CoarseBoundsReport,
    EigenvalueRecord,
    ShuffleSpec,
    coarse_bounds_check,
    eig_bounds_for_shape,
    eig_general,
    eig_kstar,
    spectrum_general,
    spectrum_kstar,
    spectrum_kstar_head,
    transposition_count,
)
from .tableaux import (
    StandardYoungTableau,
    column_insertion_tableau,
    enumerate_syt,
    k_diagonal_index,
    restrict_to_pair,
    row_insertion_tableau,
    shifted_k_diagonal_index,
)

__version__ = "0.1.0"
