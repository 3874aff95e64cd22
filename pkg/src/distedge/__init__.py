"""Distance-t edge colouring: conflict graphs, colourers, audits and graph families."""

from .colouring import (
    EPSILON,
    BoundReport,
    Colouring,
    ExactResult,
    MatchingResult,
    bound_report,
    distance_matching,
    dsatur_colour,
    exact_chromatic,
    greedy_colour,
    resample_colour,
    verify_colouring,
)
from .constructions import (
    ConstructionSpec,
    blown_up_c5,
    build,
    complete_bipartite,
    cycle,
    hamming,
    k_t_formula,
    path,
    petersen,
    projective_plane_incidence,
    random_high_girth,
)
from .graph import (
    ConflictGraph,
    Graph,
    build_graph,
    conflict_graph,
    edge_distance,
    girth,
    line_graph,
    read_edge_list,
    vertex_distance,
    vertex_edge_distance,
    write_edge_list,
)
from .walks import (
    DEFAULT_DELTA,
    audit_report,
    b_t_set,
    count_walks,
    distance_layers,
    heavy_light_audit,
    sigma,
    sigma_via,
    sparsity_audit,
    tau,
    walk_census,
)

__version__ = "0.1.0"
