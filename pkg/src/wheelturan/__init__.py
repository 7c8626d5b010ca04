"""Turán numbers of disjoint unions of wheels: constructions, exact formula
evaluators, subgraph detectors and a small-n brute-force oracle."""

from .codec import (
    canonical_form, canonical_labelling, decode_graph6, dedup_isomorphic, encode_graph6,
    is_isomorphic,
)
from .constructions import (
    ConstructionReport, FamilyParams, clique, complete_bipartite, cycle, disjoint_copies,
    even_wheel_extremal_graph, extremal_family_graph, named_graph, near_regular_path_free,
    path, star, turan_graph, wheel,
)
from .detect import (
    GenericPattern, StarForestPattern, WheelForestPattern, chromatic_number, clique_number,
    contains_cycle, contains_path, contains_star_forest, contains_subgraph, contains_wheel,
    contains_wheel_forest, is_colorable, parse_pattern,
)
from .errors import BudgetExceeded, CapacityError, DomainError, Graph6Error
from .formulas import (
    ConjectureValue, FormulaResult, closed_form_n0_candidates, conjecture_ex, ex_even_wheel_mix,
    ex_m_odd_wheels, ex_odd_wheel, ex_star_forest, f_value, family_edges, g_value,
    kst_upper_bound, liu_term, star_path_free_edges, turan_edges,
)
from .graph import Graph, GraphBuilder, disjoint_union, induced_subgraph, join_graphs
from .oracle import OracleResult, SimonovitsParams, brute_force_ex, enumerate_graphs, simonovits_params
from .sweeps import ReportRow, SweepSpec, run_check, run_sweep

__version__ = "0.1.0"
