"""Exact graph invariants and regularity of powers of edge ideals."""

from .betti import BettiTable, betti_table, koszul_betti_table, power_betti_table, regularity_of_power
from .cochordal import CochordalCover, cochord_number, is_chordal, is_cochordal, lemma_cochord_witness
from .errors import ConsistencyError, EILError, InputValidationError, PreconditionError, ResourceError
from .graph import Graph, build_graph, disjoint_union, read_graph
from .harness import (
    BoundsReport,
    ScanConfig,
    disjoint_union_lower_check,
    evaluate_bounds,
    hereditary_witness_search,
    scan,
)
from .matchings import (
    HSubgraph,
    ind_match_k2c5,
    induced_matching_number,
    matching_number,
    min_match_k2c5,
    min_maximal_matching_number,
)
from .structure import build_gn, build_hn, build_standard, is_cm_girth5, pc_membership, whisker

__version__ = "0.1.0"
