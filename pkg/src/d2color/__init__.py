"""Exact tools for 2-distance list coloring of sparse graphs."""
from .classify import Classification, Params, VertexClass, classify, compute_params, l_measure
from .colorer import ListAssignment, SampledList, color_theorem1, greedy_extend, verify_coloring
from .density import (
    brute_density,
    brute_min_potential,
    check_mad_bound,
    densest_subgraph,
    mad,
    min_potential,
    potential,
)
from .discharge import audit, case_label, run_discharging
from .errors import (
    D2ColorError,
    EmptyGraphError,
    IrreducibleGraph,
    ListTooSmall,
    ParameterError,
    ParseError,
    PreconditionViolated,
    SafetyBoundViolated,
    StaleConfigError,
    TooLargeError,
    UnknownVertexError,
)
from .exact import chi2_exact, chi2_list_exact, find_list_coloring, list_colorable_exact
from .graph import ACYCLIC, Graph, conflicts, degree_stats, girth, square
from .kernels import BACKEND
from .reducer import (
    LowDegree,
    PendantPair,
    SmallMeetsSmall,
    SmallTypeTwo,
    TwoByTwo,
    apply_reduction,
    find_reducible,
    reduction_sequence,
)

__version__ = "0.1.0"
