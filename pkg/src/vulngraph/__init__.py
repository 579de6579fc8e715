"""Exact graph vulnerability parameters, extremal tenacity constructions and
exhaustive verification of the extremal results."""

from .canon import canonical_form
from .enumeration import (
    all_connected_graphs,
    all_trees,
    all_unicyclic,
    random_connected_graph,
    random_connected_spanning_subgraph,
)
from .errors import (
    CapExceededError,
    CompleteGraphError,
    DomainError,
    InvalidGraphError,
    NotACutError,
    NotConnectedError,
    VulnGraphError,
)
from .extremal import (
    build_harary_graph,
    build_min_connectivity_graph,
    build_min_tenacity_graph,
    cycle_tenacity,
    is_max_tenacity_tree,
    is_max_tenacity_unicyclic,
    max_connectivity_value,
    max_tree_tenacity,
    max_unicyclic_tenacity,
    min_tenacity_bracket,
    path_tenacity,
)
from .graph import (
    ComponentSummary,
    Graph,
    components_after_removal,
    degree_sequence,
    from_edge_list,
    is_connected,
    members,
    vertex_set,
)
from .graph6 import parse_graph6, parse_graph6_stream, to_graph6
from .invariants import (
    PARAMETERS,
    CutCertificate,
    ParameterResult,
    all_parameters,
    connectivity,
    evaluate_cut,
    integrity,
    rupture_degree,
    scattering_number,
    tenacity,
    toughness,
)

__version__ = "0.1.0"
