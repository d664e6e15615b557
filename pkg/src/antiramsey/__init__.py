"""Anti-Ramsey numbers of loose paths and cycles in uniform hypergraphs.

Closed-form evaluators, extremal constructions with search certificates,
exact brute-force oracles, and structural diagnostics.
"""
from .coloring import EdgeColoring, find_rainbow_copy, is_rainbow, representative_subgraph
from .constructions import Certificate, LBColoring, lb_coloring, turan_extremal_loose, verify_construction
from .formulas import (
    FormulaValue, ar_linear, ar_loose, ar_short_path, consistency_audit, eg_bound, ex_linear,
    ex_loose, obs_lower_bound,
)
from .hypergraph import Hypergraph, pair_degree, rank_rset, shadow, unrank_rset
from .oracles import OracleResult, brute_ar, brute_ex, brute_ex_graph_paths
from .patterns import (
    CopyWitness, EndData, PatternSpec, SearchReport, classify_sequence, end_data, find_copy,
)
from .structure import (
    edge_class_counts, extend_rainbow, greedy_core_detect, shadow_degree_split, small_degree,
    tau_small_pairs,
)

__version__ = "0.1.0"
