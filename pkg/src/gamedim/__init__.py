"""Simple games from constant-weight codes: constructions, dimension bounds,
and exact certificates."""

__version__ = "0.1.0"

from .bitvec import (
    ENUMERATION_GUARD,
    MAX_LENGTH,
    BitVector,
    CapacityError,
    enumerate_subsets,
)
from .game import (
    GameValidationError,
    SimpleGame,
    games_equal,
    load_game,
    save_game,
    unanimity_game,
)
from .weighted import (
    FarkasCertificate,
    FeasibilitySystem,
    IntersectionRep,
    SeparationResult,
    WeightedGame,
    feasible_separation,
    is_weighted,
    load_intersection,
    save_intersection,
    solve_separation,
)
from .codes import (
    Code,
    WeightEnumerator,
    check_condition,
    constant_weight_subset,
    enumerator_of_code,
    extend_parity,
    graham_sloane,
    graham_sloane_buckets,
    hamming_code,
    load_code,
    min_distance,
    save_code,
    weight_enumerator,
)
from .construct import (
    CodeGame,
    TZGame,
    elkind_variant,
    gamma_from_code,
    permute_game,
    taylor_zwicker,
    tz_decomposition,
    verify_tz_elkind_isomorphism,
)
from .dimension import (
    DimensionReport,
    IncompatibilityGraph,
    InfeasibilityRecord,
    SearchBudget,
    SpernerBounds,
    TwoTradeCertificate,
    colosable,
    dimension_from_code_size,
    exact_dimension,
    find_two_trade,
    incompatibility_graph,
    power_of_two_dimension,
    render_report,
    sperner_bounds,
    theorem_lower_bound,
    upper_bound,
)

__all__ = [
    "ENUMERATION_GUARD",
    "MAX_LENGTH",
    "BitVector",
    "CapacityError",
    "Code",
    "CodeGame",
    "DimensionReport",
    "FarkasCertificate",
    "FeasibilitySystem",
    "GameValidationError",
    "IncompatibilityGraph",
    "InfeasibilityRecord",
    "IntersectionRep",
    "SearchBudget",
    "SeparationResult",
    "SimpleGame",
    "SpernerBounds",
    "TZGame",
    "TwoTradeCertificate",
    "WeightEnumerator",
    "WeightedGame",
    "check_condition",
    "colosable",
    "constant_weight_subset",
    "dimension_from_code_size",
    "elkind_variant",
    "enumerate_subsets",
    "enumerator_of_code",
    "exact_dimension",
    "extend_parity",
    "feasible_separation",
    "find_two_trade",
    "gamma_from_code",
    "games_equal",
    "graham_sloane",
    "graham_sloane_buckets",
    "hamming_code",
    "incompatibility_graph",
    "is_weighted",
    "load_code",
    "load_game",
    "load_intersection",
    "min_distance",
    "permute_game",
    "power_of_two_dimension",
    "render_report",
    "save_code",
    "save_game",
    "save_intersection",
    "solve_separation",
    "sperner_bounds",
    "taylor_zwicker",
    "theorem_lower_bound",
    "tz_decomposition",
    "unanimity_game",
    "upper_bound",
    "verify_tz_elkind_isomorphism",
    "weight_enumerator",
]
