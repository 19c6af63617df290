"""Exact rational truncation combinatorics for block decompositions.

roots: compositions, standard and semi-standard block data, rearrangement
enumeration, and the half-sum / weight / simple-root pairings.
instability: degrees of instability, canonical destabilizing pairs,
chamber cones, and extremal maximizers.  indicators: the step functions
built from root pairings and their alternating-sum identities.  sampling:
seeded bulk verification sweeps over random rational points.
"""

from .indicators import (
    ArthurReport,
    arthur_partition_check,
    arthur_partition_report,
    e_sum_terms,
    indicator_chi,
    indicator_E,
    indicator_F,
    indicator_sigma,
    indicator_tau,
    indicator_tau_hat,
    langlands_sum,
    levi_sum_tau_hat,
)
from .instability import (
    CanonicalPair,
    ExtremalPair,
    arranged_semistable,
    block_degree,
    canonical_pair,
    canonical_pair_brute,
    cone_accepts,
    cone_membership,
    degree_instability,
    degree_pairs,
    extremal_max_pair,
    pair_pairing,
    semistable_three_ways,
)
from .roots import (
    SemiStandardParabolic,
    StandardParabolic,
    WallError,
    WallTie,
    arrangements,
    as_fractions,
    coarsenings_of,
    compositions,
    consecutive_root_gaps,
    epsilon_between,
    group,
    minimal_parabolic,
    ordered_set_partitions,
    refinements_within,
    relative_rho_values,
    relative_weight_gaps,
    semistandard_all,
    standard_parabolics,
)
from .sampling import (
    VerifyReport,
    clear_denominators,
    full_suite,
    sample_integer_point,
    sample_point,
    verify_E,
    verify_canonical,
    verify_cones,
    verify_langlands,
    verify_levi_sum,
    verify_partition,
    verify_sigma,
)

__all__ = [name for name in dir() if not name.startswith("_")]
