"""4-connected W6-minor-free graphs: recognition, catalog, and certification."""

from ._core import (
    Graph,
    Graph6Error,
    canonical_form,
    catalog,
    catalog_lookup,
    chain_decompose,
    chvatal_holds,
    complete,
    complete_bipartite,
    cycle,
    double_wheel,
    double_wheel_plus,
    emit_dot,
    emit_graph6,
    enumerate_graphs,
    enumerate_splits,
    find_hamiltonian_cycle,
    find_minor_model,
    generate_cyclically_4conn_cubic,
    has_minor,
    is_cyclically_4_connected_cubic,
    is_isomorphic,
    is_k_connected,
    is_planar,
    is_w6_minor_free,
    line_graph,
    parse_graph6,
    root_graph_cubic,
    special,
    squared_cycle,
    verify_theorem,
    vertex_connectivity,
    wheel,
    wheel_w6,
)

__all__ = [
    "Graph",
    "Graph6Error",
    "canonical_form",
    "catalog",
    "catalog_lookup",
    "chain_decompose",
    "chvatal_holds",
    "complete",
    "complete_bipartite",
    "cycle",
    "double_wheel",
    "double_wheel_plus",
    "emit_dot",
    "emit_graph6",
    "enumerate_graphs",
    "enumerate_splits",
    "find_hamiltonian_cycle",
    "find_minor_model",
    "generate_cyclically_4conn_cubic",
    "has_minor",
    "is_cyclically_4_connected_cubic",
    "is_isomorphic",
    "is_k_connected",
    "is_planar",
    "is_w6_minor_free",
    "line_graph",
    "parse_graph6",
    "root_graph_cubic",
    "special",
    "squared_cycle",
    "verify_theorem",
    "vertex_connectivity",
    "wheel",
    "wheel_w6",
]
