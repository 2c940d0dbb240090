"""Exact independence polynomials, decycling numbers and the bound |I(G;-1)| <= 2**phi(G)."""

from .fvs import FvsResult, brute_force_fvs, decycling_number, verify_decycling_set
from .graph import (
    CapacityError,
    Graph,
    Graph6Error,
    GraphError,
    closed_neighborhood,
    components,
    cyclomatic_number,
    delete_vertices,
    disjoint_union,
    enumerate_labeled_graphs,
    find_cycle,
    from_edge_list,
    is_acyclic,
    neighborhood,
    parse_graph6,
    to_graph6,
)
from .poly import (
    Polynomial,
    alternating_number,
    brute_force_poly,
    eval_poly,
    fibonacci_number,
    ind_poly,
    reduced_euler_characteristic,
)

__version__ = "0.1.0"
