"""Non-2-colorable k-uniform hypergraphs and unsatisfiable monotone k-CNFs.

The construction groups 2l-1 cyclic vertex sequences, cuts edges out of
every l of them with every combination of cyclic shifts and position
blocks, and guarantees, by a majority/pigeonhole argument made effective
through conditional expectations, that every 2-coloring leaves some edge
monochromatic.  Dualizing edges into clause pairs yields unsatisfiable
monotone k-CNF instances.
"""

from .construction import (
    DEFAULT_EDGE_CAP,
    ConstructionError,
    Edge,
    EdgeCapError,
    Hypergraph,
    build_full,
    build_subset_hypergraph,
    dedup,
    edge_from,
    edge_vertices,
    format_edge_list,
    iter_edges,
    iter_subset_edges,
    shifted_vertex,
    write_edge_list,
)
from .counting import (
    BoundValue,
    best_l,
    binomial,
    binomial_upper_bound,
    divisors,
    edge_count,
    edge_count_upper_bound,
)
from .params import (
    DivisibilityError,
    ParameterError,
    Params,
    VertexId,
    validate_params,
    vertex_at,
    vertex_index,
)
from .satbridge import (
    BudgetExceededError,
    Cnf,
    DimacsError,
    SolveResult,
    assignment_satisfies,
    assignment_to_coloring,
    coloring_to_assignment,
    dpll_satisfiable,
    emit_dimacs,
    hypergraph_to_cnf,
    parse_dimacs,
)
from .witness import (
    BLUE,
    COLORS,
    RED,
    Coloring,
    ColoringError,
    MajorityError,
    MajorityProfile,
    Witness,
    aligned_positions,
    conditional_expectation,
    derandomized_shifts,
    exhaustive_best_shifts,
    find_proper_coloring,
    majority_profile,
    monochromatic_witness,
    parse_coloring,
    random_coloring,
    select_same_majority,
    swap_colors,
)

__version__ = "0.1.0"
