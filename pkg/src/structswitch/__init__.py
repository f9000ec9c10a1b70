"""Sparsest input placement for structurally controllable switched linear systems."""

from .exceptions import DimensionError, InfeasibleError, ParseError, ResourceLimitError
from .graphs import (
    Digraph,
    SccDecomposition,
    accessible_set,
    build_state_digraph,
    condition_i_holds,
    scc_decompose,
    to_dot,
)
from .matching import (
    AColumn,
    Matching,
    SColumn,
    WeightedBipartite,
    build_placement_bipartite,
    generic_rank,
    max_matching,
    min_weight_max_matching,
)
from .modes import (
    ModeSubsetResult,
    make_setcover_instance,
    min_modes_exact,
    min_modes_greedy,
    restrict,
)
from .patterns import (
    Pattern,
    SwitchedSystem,
    concat,
    parse_system,
    serialize_system,
    union,
)
from .placement import (
    ModeInputAssignment,
    PlacementSolution,
    dedicated_b,
    dedicated_placement,
    distribute,
    minimal_b,
    non_dedicated_b,
)
from .verification import (
    NumericSystem,
    VerificationReport,
    brute_force_min_dedicated,
    check_structural_controllability,
    numeric_controllable,
    realize,
    switched_ctrb_matrix,
)

__version__ = "0.1.0"
