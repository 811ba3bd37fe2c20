"""Anti-forcing numbers of graph powers: exact oracles, closed forms, harness."""

from .antiforcing import (
    AntiForcingResult,
    MatchingAnalysis,
    NoPerfectMatchingError,
    af_of_matching,
    af_subset_search,
    af_via_matchings,
    forcing_number,
    forcing_of_matching,
    is_anti_forcing_set,
)
from .budget import Budget, BudgetExceededError
from .families import (
    FAMILIES,
    build,
    complete,
    cycle,
    friendship,
    ortho_square_chain,
    para_square_chain,
    path,
    triangular_chain,
)
from .formulas import (
    BoundPair,
    FormulaResult,
    af_cycle_power_bounds,
    af_friendship_power,
    af_ortho_power,
    af_ortho_power_closed_form,
    af_para_power,
    af_para_power_closed_form,
    af_path_power,
    af_triangular_chain_power,
)
from .graph import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    diameter,
    edge,
    from_edgelist,
    from_json,
    is_complete,
    loads,
    max_degree,
    power,
    to_edgelist,
    to_json,
)
from .harness import (
    InternalInvariantError,
    SweepSpec,
    VerificationRecord,
    check_closed_form_consistency,
    classify_status,
    default_sweep_spec,
    emit_report,
    evaluate_formula,
    parse_range,
    run_edge_count_audit,
    run_monotonicity_check,
    run_sweep,
)
from .matching import (
    AlternatingCycle,
    Matching,
    alternating_cycles,
    count_perfect_matchings,
    enumerate_perfect_matchings,
    has_perfect_matching,
    has_unique_perfect_matching,
    is_matching,
    is_perfect_matching,
    maximum_matching,
    symmetric_difference_cycles,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
