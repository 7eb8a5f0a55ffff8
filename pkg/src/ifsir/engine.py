"""The superiority/inferiority ranking pipeline for group decision problems.

Stages, each a pure function over the previous one's output:

1. :func:`expert_degrees` - each expert's importance IFN is turned into a
   real measure degree via closeness to the ideal point.
2. :func:`integrate` - per-expert assessments and criterion weights are
   aggregated into group matrices, using the measure degrees as raw weights.
3. :func:`performance_matrix` - every group assessment collapses to a scalar
   performance via closeness between ideal and anti-ideal.
4. :func:`si_indices` - pairwise performance gaps, pushed through a threshold
   function, are summed into per-criterion superiority and inferiority
   indices (wins and losses).
5. :func:`flows` - index rows weight the group criterion weights into one
   superiority flow and one inferiority flow IFN per alternative.

:func:`solve` runs all stages and the ranking on top of them. Per-criterion
columns are independent throughout; everything is deterministic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence, Union

from . import ranking
from .aggregation import ifwa, ifwg
from .errors import DegenerateReference, DimensionMismatch
from .ifn import Ifn
from .linguistic import LinguisticScale
from .measures import Metric, closeness
from .thresholds import Step, ThresholdSpec

Assessment = Union[Ifn, str]


class Aggregator(enum.Enum):
    """Operator used to integrate per-expert criterion weights."""

    IFWA = "ifwa"
    IFWG = "ifwg"


@dataclass(frozen=True)
class SolverConfig:
    """Tunable parts of the pipeline; defaults reproduce the shipped fixture.

    The assessment matrix is always integrated with IFWA; ``weight_aggregator``
    selects the operator for the criterion weights only. ``ifwg`` is the
    equally defensible alternative reading and is fully supported.
    """

    weight_aggregator: Aggregator = Aggregator.IFWA
    threshold: ThresholdSpec = field(default_factory=lambda: Step(0.01))
    ideal: Ifn = field(default_factory=lambda: Ifn(1.0, 0.0))
    anti_ideal: Ifn = field(default_factory=lambda: Ifn(0.0, 1.0))
    expert_degree_metric: Metric = Metric.NORMALIZED_EUCLIDEAN
    performance_metric: Metric = Metric.NORMALIZED_HAMMING

    def __post_init__(self) -> None:
        if self.ideal == self.anti_ideal:
            raise DegenerateReference(f"ideal and anti-ideal coincide at {self.ideal}")


@dataclass(frozen=True)
class GroupDecisionProblem:
    """A group multi-criteria decision problem.

    Entries of ``expert_importance``, ``criterion_weights`` and ``assessments``
    are either resolved :class:`Ifn` values or linguistic terms; terms resolve
    against ``importance_scale`` (expert importance and criterion weights) or
    ``quality_scale`` (assessments) on access.

    Shapes: ``criterion_weights[k][j]`` is expert k's weight for criterion j;
    ``assessments[k][i][j]`` is expert k's assessment of alternative i on
    criterion j.
    """

    alternatives: tuple[str, ...]
    criteria: tuple[str, ...]
    experts: tuple[str, ...]
    expert_importance: tuple[Assessment, ...]
    criterion_weights: tuple[tuple[Assessment, ...], ...]
    assessments: tuple[tuple[tuple[Assessment, ...], ...], ...]
    importance_scale: LinguisticScale
    quality_scale: LinguisticScale
    config: SolverConfig = field(default_factory=SolverConfig)

    def __post_init__(self) -> None:
        object.__setattr__(self, "alternatives", tuple(self.alternatives))
        object.__setattr__(self, "criteria", tuple(self.criteria))
        object.__setattr__(self, "experts", tuple(self.experts))
        object.__setattr__(self, "expert_importance", tuple(self.expert_importance))
        object.__setattr__(
            self, "criterion_weights", tuple(tuple(row) for row in self.criterion_weights)
        )
        object.__setattr__(
            self,
            "assessments",
            tuple(tuple(tuple(row) for row in grid) for grid in self.assessments),
        )
        self._check_shape()

    def _check_shape(self) -> None:
        n, m, count = len(self.alternatives), len(self.criteria), len(self.experts)
        if n < 2:
            raise DimensionMismatch(f"need at least 2 alternatives, got {n}")
        if m < 1:
            raise DimensionMismatch("need at least 1 criterion")
        if count < 1:
            raise DimensionMismatch("need at least 1 expert")
        for label, names in (
            ("alternatives", self.alternatives),
            ("criteria", self.criteria),
            ("experts", self.experts),
        ):
            if any(not isinstance(name, str) or not name for name in names):
                raise DimensionMismatch(f"{label} must be non-empty strings")
            if len(set(names)) != len(names):
                raise DimensionMismatch(f"{label} contains duplicate names")
        if len(self.expert_importance) != count:
            raise DimensionMismatch(
                f"expert_importance has {len(self.expert_importance)} entries "
                f"for {count} experts"
            )
        if len(self.criterion_weights) != count:
            raise DimensionMismatch(
                f"criterion_weights has {len(self.criterion_weights)} rows for {count} experts"
            )
        for k, row in enumerate(self.criterion_weights):
            if len(row) != m:
                raise DimensionMismatch(
                    f"criterion_weights[{self.experts[k]}] has {len(row)} entries "
                    f"for {m} criteria"
                )
        if len(self.assessments) != count:
            raise DimensionMismatch(
                f"assessments has {len(self.assessments)} grids for {count} experts"
            )
        for k, grid in enumerate(self.assessments):
            if len(grid) != n:
                raise DimensionMismatch(
                    f"assessments[{self.experts[k]}] has {len(grid)} rows for {n} alternatives"
                )
            for i, row in enumerate(grid):
                if len(row) != m:
                    raise DimensionMismatch(
                        f"assessments[{self.experts[k]}][{self.alternatives[i]}] has "
                        f"{len(row)} entries for {m} criteria"
                    )

    def resolved_expert_importance(self) -> tuple[Ifn, ...]:
        return tuple(_resolve(v, self.importance_scale) for v in self.expert_importance)

    def resolved_criterion_weights(self) -> tuple[tuple[Ifn, ...], ...]:
        return tuple(
            tuple(_resolve(v, self.importance_scale) for v in row)
            for row in self.criterion_weights
        )

    def resolved_assessments(self) -> tuple[tuple[tuple[Ifn, ...], ...], ...]:
        return tuple(
            tuple(tuple(_resolve(v, self.quality_scale) for v in row) for row in grid)
            for grid in self.assessments
        )


def _resolve(value: Assessment, scale: LinguisticScale) -> Ifn:
    return value if isinstance(value, Ifn) else scale.resolve(value)


@dataclass(frozen=True)
class GroupMatrices:
    """Group-integrated decision information."""

    assessments: tuple[tuple[Ifn, ...], ...]  # n x m
    weights: tuple[Ifn, ...]  # m
    degrees: tuple[float, ...]  # one per expert


@dataclass(frozen=True)
class PerformanceMatrix:
    values: tuple[tuple[float, ...], ...]  # n x m, entries in [0, 1]


@dataclass(frozen=True)
class IndexMatrices:
    superiority: tuple[tuple[float, ...], ...]  # n x m
    inferiority: tuple[tuple[float, ...], ...]  # n x m


@dataclass(frozen=True)
class FlowEntry:
    alternative: str
    s_flow: Ifn
    i_flow: Ifn

    @property
    def s_score(self) -> float:
        return self.s_flow.score()

    @property
    def i_score(self) -> float:
        return self.i_flow.score()


@dataclass(frozen=True)
class FlowTable:
    entries: tuple[FlowEntry, ...]

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, alternative: str) -> FlowEntry:
        for entry in self.entries:
            if entry.alternative == alternative:
                return entry
        raise KeyError(alternative)


def expert_degrees(problem: GroupDecisionProblem) -> tuple[float, ...]:
    """Measure degree of each expert: closeness of their importance IFN to
    the ideal point, in [0, 1] (1 exactly at the ideal)."""
    cfg = problem.config
    return tuple(
        closeness(cfg.expert_degree_metric, w, cfg.ideal, cfg.anti_ideal)
        for w in problem.resolved_expert_importance()
    )


def integrate(problem: GroupDecisionProblem, degrees: Sequence[float]) -> GroupMatrices:
    """Fold per-expert opinions into group matrices.

    Assessments always integrate with IFWA; criterion weights with the
    configured operator. The measure degrees act as raw (unnormalized)
    exponents in both.
    """
    if len(degrees) != len(problem.experts):
        raise DimensionMismatch(f"{len(degrees)} degrees for {len(problem.experts)} experts")
    weight_op = ifwa if problem.config.weight_aggregator is Aggregator.IFWA else ifwg
    by_expert = problem.resolved_assessments()
    group_rows = tuple(
        tuple(
            ifwa([by_expert[k][i][j] for k in range(len(problem.experts))], degrees)
            for j in range(len(problem.criteria))
        )
        for i in range(len(problem.alternatives))
    )
    weight_rows = problem.resolved_criterion_weights()
    group_weights = tuple(
        weight_op([weight_rows[k][j] for k in range(len(problem.experts))], degrees)
        for j in range(len(problem.criteria))
    )
    return GroupMatrices(group_rows, group_weights, tuple(degrees))


def performance_matrix(group: GroupMatrices, config: SolverConfig) -> PerformanceMatrix:
    """Collapse each group assessment to its closeness between ideal and
    anti-ideal; 1 is reached exactly at the ideal point."""
    return PerformanceMatrix(
        tuple(
            tuple(
                closeness(config.performance_metric, value, config.ideal, config.anti_ideal)
                for value in row
            )
            for row in group.assessments
        )
    )


def si_indices(performance: PerformanceMatrix, threshold: ThresholdSpec) -> IndexMatrices:
    """Superiority and inferiority indices per alternative and criterion.

    For alternative i on criterion j, superiority sums the thresholded margins
    over every rival t (phi(g_ij - g_tj)) and inferiority the reversed margins.
    Both matrices sum the same set of ordered pairs, so their per-criterion
    column sums coincide for any threshold.
    """
    g = performance.values
    n = len(g)
    m = len(g[0]) if n else 0
    superiority = tuple(
        tuple(
            sum(threshold(g[i][j] - g[t][j]) for t in range(n) if t != i) for j in range(m)
        )
        for i in range(n)
    )
    inferiority = tuple(
        tuple(
            sum(threshold(g[t][j] - g[i][j]) for t in range(n) if t != i) for j in range(m)
        )
        for i in range(n)
    )
    return IndexMatrices(superiority, inferiority)


def flows(
    indices: IndexMatrices, weights: Sequence[Ifn], alternatives: Sequence[str]
) -> FlowTable:
    """Aggregate the group criterion weights with each index row as exponents.

    An all-zero index row yields the boundary flow (0, 1): with every exponent
    zero each factor is neutral (0^0 == 1 included).
    """
    if len(indices.superiority) != len(alternatives):
        raise DimensionMismatch(
            f"{len(indices.superiority)} index rows for {len(alternatives)} alternatives"
        )
    entries = tuple(
        FlowEntry(
            alternative=name,
            s_flow=ifwa(list(weights), list(indices.superiority[i])),
            i_flow=ifwa(list(weights), list(indices.inferiority[i])),
        )
        for i, name in enumerate(alternatives)
    )
    return FlowTable(entries)


@dataclass(frozen=True)
class SolveResult:
    """Everything the pipeline produced, end to end."""

    problem: GroupDecisionProblem
    degrees: tuple[float, ...]
    group: GroupMatrices
    performance: PerformanceMatrix
    indices: IndexMatrices
    flow_table: FlowTable
    outcome: ranking.RankingOutcome


def solve(problem: GroupDecisionProblem) -> SolveResult:
    """Run the whole pipeline on a validated problem."""
    degrees = expert_degrees(problem)
    group = integrate(problem, degrees)
    performance = performance_matrix(group, problem.config)
    indices = si_indices(performance, problem.config.threshold)
    flow_table = flows(indices, group.weights, problem.alternatives)
    outcome = ranking.rank(flow_table)
    return SolveResult(problem, degrees, group, performance, indices, flow_table, outcome)
