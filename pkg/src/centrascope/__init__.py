"""Discriminant power of node centrality measures on small connected graphs."""

from .centrality import (
    KINDS,
    CentralityVector,
    SpectralDecomposition,
    betweenness_centrality,
    closeness_centrality,
    degree_centrality,
    eigenvector_centrality,
    spectral_decomposition,
    subgraph_centrality,
    subgraph_centrality_series,
)
from .discriminance import DiscriminanceRecord, DiscriminantPower, discriminance_record, discriminant_power, stddev_zero
from .enumerate import GraphStream, enumerate_connected, read_graph6_file, write_graph6_file
from .graph import (
    Graph,
    WalkDiagonal,
    bfs_distances,
    canonical_form,
    from_edge_list,
    is_connected,
    parse_graph6,
    to_graph6,
    walk_diagonals,
)
from .structure import (
    StructureProfile,
    automorphism_orbits,
    is_bipartite,
    is_distance_regular,
    is_regular,
    is_vertex_transitive,
    is_walk_regular,
    structure_profile,
)

__version__ = "0.1.0"
