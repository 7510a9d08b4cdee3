"""Extremal ordered graphs without bordered cycles.

A bordered cycle is an ordered even cycle spanning two intervals that
contains both its outer border (first vertex of the low interval to last of
the high) and its inner border (last of the low to first of the high).
This package builds dense ordered graphs avoiding all short bordered
cycles from generalized Sidon sets, detects and classifies ordered cycle
patterns, extracts bordered-cycle-free subgraphs via longest-path coloring
of the border digraph, and audits the peeling/zigzag counting argument
that pins the extremal edge count to Theta(n^(1+1/k)) at desk scale.
"""

from .audit import PeelSequence, ZigzagAudit, exact_extremal_tiny, peel, zigzag_audit
from .construct import ConstructionRecord, build, certify_freeness, construction_graph
from .errors import (
    InputFormatError,
    InternalInvariantError,
    ResourceLimitError,
    SplitError,
)
from .extract import (
    BorderDigraph,
    LevelColoring,
    border_digraph,
    extract_c2l_free,
    gallai_roy_coloring,
    iterated_extract,
    ko_reduction,
)
from .ograph import (
    OrderedGraph,
    ZeroOneMatrix,
    from_edge_list,
    graph_from_matrix,
    interval_chromatic_number,
    left_right_neighborhoods,
    random_ordered_graph,
    read_graph,
    read_matrix,
    subgraph_with_edges,
    to_bipartite_matrix,
    write_graph,
    write_matrix,
)
from .patterns import (
    BORDERED,
    INBORDERED,
    OUTBORDERED,
    UNBORDERED,
    CyclePattern,
    CycleWitness,
    classify,
    contains_pattern,
    count_zigzag_paths,
    enumerate_ordered_cycles,
    find_bordered_cycles,
    find_pattern_embeddings,
    named_patterns,
    pattern_matrix,
    reverse_second_interval,
)
from .sidon import (
    BkSet,
    best_bk_for_budget,
    bose_chowla,
    greedy_bk,
    read_bk_set,
    verify_bk,
    write_bk_set,
)

__version__ = "0.1.0"
