"""Exact well-f-coveredness analysis of graphs and their lexicographic products."""

from .graphs import (
    FIG1_EDGES,
    FamilyError,
    FamilySpec,
    Graph,
    Graph6Error,
    VertexSubset,
    connected_components,
    disjoint_union,
    from_graph6,
    generate,
    induced_subgraph,
    is_acyclic,
    parse_family,
    to_graph6,
)
from .products import ProductIndexMap, lexicographic, relabel_product_subset
from .forests import (
    DEFAULT_MAX_ORDER,
    EnumerationBoundError,
    ForestPartition,
    ForestStats,
    enumerate_maximal_induced_forests,
    forest_number,
    forest_partition,
    forest_stats,
    is_induced_forest,
    is_maximal_induced_forest,
    is_well_f_covered,
    maximal_forest_order_histogram,
)
from .independence import (
    enumerate_maximal_independent_sets,
    independence_number,
    is_maximal_independent_set,
    is_well_covered,
)
from .theorems import (
    ClaimRecord,
    ConditionRecord,
    HypothesisError,
    TheoremReport,
    WitnessRecord,
    WitnessSpec,
    WitnessVerificationError,
    check_thm31,
    check_thm32,
    check_thm35,
    construct_vm,
    construct_vstar_empty_second,
    construct_vstar_nonempty_second,
    make_witness_spec,
    thm32_lhs,
    thm35_lhs,
)
from .examples import verify_paper_examples
from .search import Finding, ScanConfig, hypothesis_filter, read_graph6_stream, scan

__version__ = "0.1.0"
