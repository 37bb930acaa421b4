"""Exact and Monte Carlo tooling for comparability in the Bruhat orders on S_n."""

from .limits import CapExceeded, cap
from .numerics import (
    LogSumExp,
    log_factorial,
    log_int,
    log_mean_exp,
    log_sum_exp,
    log_tables,
    normalized_exponent,
)
from .permutations import (
    InversionSet,
    Perm,
    PrefixSet,
    all_permutations,
    compose,
    format_permutation,
    gale_leq,
    identity,
    inverse,
    inversion_set,
    longest_increasing_subsequence,
    parse_permutation,
    random_permutation,
    reversal,
    strong_leq,
    strong_leq_via_gale,
    weak_leq,
)
from .posets import (
    GkfProfile,
    PermutationPoset,
    antichain_gkf_params,
    bochkov_petrov_bounds,
    build_poset,
    count_linear_extensions,
    gkf_profile,
    max_union_of_antichains,
    mirsky_block_sizes,
    mirsky_partition,
    verify_bp_sandwich,
    weak_down_count,
)
from .reports import TOOL_VERSION as __version__
from .reports import spawn_stream
from .strong_order import (
    DeviationWalk,
    FamilyExperiment,
    SigmaFamilySpec,
    WalkTailReport,
    census_strong,
    default_block_parameter,
    deviation_walk,
    enumerate_sigma_family,
    family_comparability_experiment,
    family_log_size,
    sample_sigma_family,
    strong_lower_bound_exponent,
    walk_equivalence_check,
    walk_tail_check,
)
from .tableaux import (
    LisTailReport,
    PsiBoundReport,
    StandardTableau,
    conjugate,
    count_syt,
    enumerate_partitions,
    format_partition,
    greene_union_bruteforce,
    hook_length,
    hook_product,
    lis_tail_experiment,
    parse_partition,
    partition_count,
    plancherel_log_weight,
    psi,
    psi_bound,
    rsk,
    rsk_shape,
    sample_plancherel,
    verify_greene,
    verify_psi_bound,
)
from .weak_order import (
    ExponentSandwich,
    WeakCensusRow,
    balanced_factorial_min,
    census_weak,
    hp_reference_bounds,
    plancherel_upper_bound,
    sandwich_monte_carlo,
    verify_balancing_exchange,
    weak_lower_bound_exponent,
)
