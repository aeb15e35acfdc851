"""Generate graphs with a prescribed quotient and measure how their symmetries line up with it."""
from .automorphism import OrbitPartition, orbits, orbits_bruteforce
from .cardinality import CardinalitySolution, scale, solve_minimal
from .errors import DomainError, InputError, ParseError, SearchBudgetExceeded
from .feasibility import FeasibilitySystem, build_system, check_erdos_gallai, check_gale_ryser, is_feasible
from .graph import Graph, Partition, Permutation, degree_to_cluster, is_automorphism
from .graphio import read_edge_list, to_dot, write_edge_list
from .metrics import AlignmentRecord, alignment_metric, analyze, summarize, sweep
from .quotient import (
    QuotientGraph,
    coarsest_equitable,
    extract_quotient,
    is_equitable,
    parse_quotient,
    q_matrix,
    serialize_quotient,
)
from .rewire import randomize, swap_inter, swap_intra
from .wiring import generate, make_plan, wire_inter, wire_inter_dual, wire_intra

__version__ = "0.1.0"
