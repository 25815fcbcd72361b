"""Minimal separators of graphs: enumeration, extremal families and class dichotomy."""

from minsep.dichotomy import Classification, Verdict, classify, survey_all_families
from minsep.errors import (
    ConsistencyError,
    FamilyError,
    GraphError,
    GraphFormatError,
    MinsepError,
    OutOfScopeError,
    PreconditionError,
    SamplingError,
)
from minsep.generators import c5_blowup, grid, line_theta, line_wall, named, theta, wall
from minsep.graph import (
    Graph,
    canonical_form,
    complement,
    complete_graph,
    components,
    co_components,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edge_list,
    induced_subgraph,
    join,
    line_graph,
    path_graph,
)
from minsep.graphio import format_graph, parse_graph, read_graph, write_graph
from minsep.patterns import GraphFamily, contains_induced, dominates, family, is_family_free, parse_family
from minsep.separators import (
    SeparatorReport,
    is_minimal_separator,
    minimal_ab_separators,
    minimal_separators,
    minimal_separators_brute,
    separator_count,
)

__version__ = "0.1.0"
