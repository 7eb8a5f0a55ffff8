"""Group multi-criteria decision making with the intuitionistic fuzzy
superiority/inferiority ranking (IF-SIR) method.

Typical use::

    from ifsir import load_problem, solve, emit_report

    result = solve(load_problem("problem.json"))
    print(emit_report(result))
"""

from .aggregation import ifwa, ifwg
from .engine import (
    Aggregator,
    FlowEntry,
    FlowTable,
    GroupDecisionProblem,
    GroupMatrices,
    IndexMatrices,
    PerformanceMatrix,
    SolveResult,
    SolverConfig,
    expert_degrees,
    flows,
    integrate,
    performance_matrix,
    si_indices,
    solve,
)
from .errors import (
    DegenerateReference,
    DimensionMismatch,
    DuplicateTerm,
    EmptyInput,
    IfsirError,
    InvalidIfn,
    InvalidThresholdParams,
    LengthMismatch,
    NonPositiveScalar,
    ParseError,
    UnknownTerm,
)
from .ifn import Ifn, Ordering, compare, ranking_key
from .linguistic import (
    LinguisticScale,
    ScaleEntry,
    builtin_scales,
    get_builtin,
    load_scale,
    scale_from_document,
    scale_to_document,
)
from .measures import Metric, closeness, distance
from .problemfile import (
    load_problem,
    parse_problem,
    problem_from_document,
    problem_to_document,
)
from .ranking import (
    Relation,
    RelationTable,
    RankingOutcome,
    combine,
    complete_ranking,
    i_ranking,
    rank,
    s_ranking,
)
from .report import emit_dot, emit_report, format_strata
from .thresholds import (
    Gaussian,
    Level,
    LinearWithIndifference,
    Step,
    ThresholdSpec,
    Usual,
    UShape,
    VShape,
)

__version__ = "0.1.0"

__all__ = [
    "Aggregator",
    "DegenerateReference",
    "DimensionMismatch",
    "DuplicateTerm",
    "EmptyInput",
    "FlowEntry",
    "FlowTable",
    "Gaussian",
    "GroupDecisionProblem",
    "GroupMatrices",
    "Ifn",
    "IfsirError",
    "IndexMatrices",
    "InvalidIfn",
    "InvalidThresholdParams",
    "LengthMismatch",
    "Level",
    "LinearWithIndifference",
    "LinguisticScale",
    "Metric",
    "NonPositiveScalar",
    "Ordering",
    "ParseError",
    "PerformanceMatrix",
    "RankingOutcome",
    "Relation",
    "RelationTable",
    "ScaleEntry",
    "SolveResult",
    "SolverConfig",
    "Step",
    "ThresholdSpec",
    "UShape",
    "UnknownTerm",
    "Usual",
    "VShape",
    "builtin_scales",
    "closeness",
    "combine",
    "compare",
    "complete_ranking",
    "distance",
    "emit_dot",
    "emit_report",
    "expert_degrees",
    "flows",
    "format_strata",
    "get_builtin",
    "i_ranking",
    "ifwa",
    "ifwg",
    "integrate",
    "load_problem",
    "load_scale",
    "parse_problem",
    "performance_matrix",
    "problem_from_document",
    "problem_to_document",
    "rank",
    "ranking_key",
    "s_ranking",
    "scale_from_document",
    "scale_to_document",
    "si_indices",
    "solve",
]
