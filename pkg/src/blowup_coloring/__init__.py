"""Exact defective-coloring toolkit for clique blowups of small graphs.

The library computes and cross-checks, at desk scale, the relationship
between the chromatic number chi(G) of a graph and the d-defective
chromatic number of its clique blowup G ⊠ K_{d+1}:

    chi^d(G ⊠ K_{d+1})  <=  chi(G)  <=  2 * chi^d(G ⊠ K_{d+1}),

with equality on the left for d < 2 and, for d >= 2, constructions from
list-coloring witnesses that push the ratio strictly above 1.  It ships
exact solvers (chromatic number, defective chromatic number, list
colorability), the constructions themselves, an independent-transversal
search, and a spectral/scan harness, all with verifiable certificates.
"""

from .coloring import (
    Coloring,
    ListAssignment,
    color_degree,
    defect,
    is_L_coloring,
    is_d_defective,
    is_proper,
    max_color_degree,
    read_coloring,
    read_list_assignment,
    write_coloring,
    write_list_assignment,
)
from .constructions import (
    CounterexampleBundle,
    Witness,
    build_counterexample,
    build_extraction_graph,
    defective_blowup_coloring,
    extract_proper_from_defective,
    join_lift,
    lift_proper_to_defective,
    normalize_witness,
    read_witness,
    slot_block_index,
    witness_palette_formula,
    write_witness,
)
from .errors import (
    BlowupColoringError,
    BudgetExhaustedError,
    InvalidParameterError,
    InvalidWitnessError,
    ParseError,
    SearchInvariantError,
)
from .graphs import (
    Graph,
    ProductView,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    induced_subgraph,
    join,
    max_degree,
    path_graph,
    petersen_graph,
    random_graph,
    read_graph,
    strong_product,
    write_graph,
)
from .harness import (
    ScanRecord,
    ScanSummary,
    canonical_form,
    enumerate_canonical_graphs,
    graph_id,
    hoffman_bound,
    scan_graphs,
)
from .solvers import (
    Budget,
    SolveResult,
    chromatic_number,
    clique_lower_bound,
    defective_chromatic_number,
    is_list_colorable,
)
from .transversal import (
    TransversalResult,
    VertexPartition,
    find_independent_transversal,
    haxell_condition,
    read_partition,
    write_partition,
    write_transversal,
)

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "BlowupColoringError",
    "BudgetExhaustedError",
    "Coloring",
    "CounterexampleBundle",
    "Graph",
    "InvalidParameterError",
    "InvalidWitnessError",
    "ListAssignment",
    "ParseError",
    "ProductView",
    "ScanRecord",
    "ScanSummary",
    "SearchInvariantError",
    "SolveResult",
    "TransversalResult",
    "VertexPartition",
    "Witness",
    "build_counterexample",
    "build_extraction_graph",
    "canonical_form",
    "chromatic_number",
    "clique_lower_bound",
    "color_degree",
    "complete_bipartite_graph",
    "complete_graph",
    "cycle_graph",
    "defect",
    "defective_blowup_coloring",
    "defective_chromatic_number",
    "empty_graph",
    "enumerate_canonical_graphs",
    "extract_proper_from_defective",
    "find_independent_transversal",
    "graph_id",
    "haxell_condition",
    "hoffman_bound",
    "induced_subgraph",
    "is_L_coloring",
    "is_d_defective",
    "is_list_colorable",
    "is_proper",
    "join",
    "join_lift",
    "lift_proper_to_defective",
    "max_color_degree",
    "max_degree",
    "normalize_witness",
    "path_graph",
    "petersen_graph",
    "random_graph",
    "read_coloring",
    "read_graph",
    "read_list_assignment",
    "read_partition",
    "read_witness",
    "scan_graphs",
    "slot_block_index",
    "strong_product",
    "witness_palette_formula",
    "write_coloring",
    "write_graph",
    "write_list_assignment",
    "write_partition",
    "write_transversal",
    "write_witness",
]
