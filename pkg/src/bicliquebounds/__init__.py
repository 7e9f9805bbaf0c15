"""Maximal induced bicliques, false-twin reduction and lower-bound checks.

Graphs are immutable with one int bitmask of neighbours per vertex.  The
modules build on each other in this order: ``graph``, ``bicliques``,
``twins``, ``witness``, ``families``, ``census``; ``cli`` wraps them all.
"""

from .bicliques import (
    Biclique,
    bicliques_containing,
    count_bicliques,
    enumerate_bicliques,
    is_maximal_biclique,
    oracle_bicliques,
    star_bicliques,
)
from .families import (
    complete,
    complete_bipartite,
    conjecture1_bound,
    conjecture2_bound,
    crown_cycle,
    cycle,
    figure1_fixture,
    figure2_fixture,
    path,
    powerset_family,
)
from .graph import (
    Graph,
    GraphError,
    delete_vertex,
    from_edges,
    is_bipartite,
    is_connected,
    is_diamond_free,
    is_induced_c4_free,
    is_triangle_free,
    parse_edge_list,
    parse_graph6,
    to_edge_list,
    to_graph6,
)
from .twins import (
    GoodAssignment,
    Infeasible,
    TwinPartition,
    alone_vertices,
    are_true_twins,
    false_twin_classes,
    good_assignment,
    is_dominated,
    is_false_twin_free,
    simplicial_cliques,
    simplicial_vertices,
    tw_reduce,
    verify_good_assignment,
)
from .witness import (
    PreconditionError,
    WitnessDefect,
    augment_pendants,
    build_witness,
    lower_bound_c4,
    verify_witness,
)

__version__ = "0.1.0"
