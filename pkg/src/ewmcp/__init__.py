"""Upper bounds, exact solvers, and benchmarks for the edge-weighted
maximum clique problem."""

__version__ = "0.1.0"

from .bounds import (
    Ub1Certificate,
    Ub2Certificate,
    compute_greedy_dual_bound,
    compute_ub1,
    compute_ub2,
    percentage_diff,
    percentage_gap,
)
from .coloring import (
    ColoringRequest,
    default_protocol,
    dsatur,
    make_coloring,
    random_greedy,
    reorder_classes,
)
from .errors import (
    EwmcpError,
    InputError,
    LpLimitError,
    MetricUndefinedError,
    ParseError,
)
from .exact import ExactResult, branch_and_bound_omega, brute_force_omega
from .generators import (
    FamilyInstance,
    gen_g1,
    gen_g2,
    gen_g3,
    gen_random,
    random_grid,
)
from .graph import (
    Clique,
    Coloring,
    WeightedGraph,
    is_clique,
    total_edge_weight,
    validate_coloring,
)
from .instance_io import (
    InstanceSpec,
    apply_weight_rule,
    parse_dimacs,
    read_instance,
    write_instance,
)
from .lp import LinearProgram, LpSolution, export_mps, read_mps, solve

__all__ = [
    "Clique",
    "Coloring",
    "ColoringRequest",
    "EwmcpError",
    "ExactResult",
    "FamilyInstance",
    "InputError",
    "InstanceSpec",
    "LinearProgram",
    "LpLimitError",
    "LpSolution",
    "MetricUndefinedError",
    "ParseError",
    "Ub1Certificate",
    "Ub2Certificate",
    "WeightedGraph",
    "apply_weight_rule",
    "branch_and_bound_omega",
    "brute_force_omega",
    "compute_greedy_dual_bound",
    "compute_ub1",
    "compute_ub2",
    "default_protocol",
    "dsatur",
    "export_mps",
    "gen_g1",
    "gen_g2",
    "gen_g3",
    "gen_random",
    "is_clique",
    "make_coloring",
    "parse_dimacs",
    "percentage_diff",
    "percentage_gap",
    "random_greedy",
    "random_grid",
    "read_instance",
    "read_mps",
    "reorder_classes",
    "solve",
    "total_edge_weight",
    "validate_coloring",
    "write_instance",
]
