"""Problem documents: parsing, validation and serialization.

A problem file is a JSON object with these sections::

    {
      "scales": {"importance": <scale>, "quality": <scale>},
      "alternatives": ["Y_1", ...],
      "experts": [{"name": "e_1", "importance": <cell>}, ...],
      "criteria": [{"name": "G_1", "weights": {"e_1": <cell>, ...}}, ...],
      "assessments": {"e_1": [<row per alternative, one <cell> per criterion>], ...},
      "config": { ... optional ... }
    }

``<scale>`` is a builtin scale name, ``{"file": "path.json"}`` (relative to the
problem file) or an inline ``{"name", "entries"}`` document. ``<cell>`` is a
linguistic term string, a ``[mu, nu]`` pair, or ``{"mu", "nu"}``. Terms are
resolved eagerly so that a bad cell fails at parse time with its path.

``config`` accepts ``weight_aggregator`` ("ifwa"/"ifwg"), ``threshold``
(``{"kind": ..., <params>}``), ``expert_degree_metric`` and
``performance_metric`` ("euclidean"/"hamming"), ``ideal`` and ``anti_ideal``
(IFN cells). Omitted fields take the documented defaults.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Mapping

from .engine import Aggregator, Assessment, GroupDecisionProblem, SolverConfig
from .errors import (
    DimensionMismatch,
    InvalidIfn,
    InvalidThresholdParams,
    ParseError,
    UnknownTerm,
)
from .ifn import Ifn
from .linguistic import (
    LinguisticScale,
    get_builtin,
    scale_from_document,
    scale_to_document,
)
from .measures import Metric
from .thresholds import KINDS, ThresholdSpec

_TOP_KEYS = {"scales", "alternatives", "experts", "criteria", "assessments", "config", "meta"}
_CONFIG_KEYS = {
    "weight_aggregator",
    "threshold",
    "expert_degree_metric",
    "performance_metric",
    "ideal",
    "anti_ideal",
}


def load_problem(path: str | Path) -> GroupDecisionProblem:
    """Read and parse a problem JSON file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as err:
        raise ParseError(f"{path}: cannot read problem file: {err}") from err
    return parse_problem(text, base_dir=path.parent)


def parse_problem(text: str, *, base_dir: str | Path | None = None) -> GroupDecisionProblem:
    """Parse problem JSON text; ``base_dir`` anchors scale file references."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"problem: invalid JSON: {err}") from err
    return problem_from_document(doc, base_dir=base_dir)


def problem_from_document(
    doc: Mapping, *, base_dir: str | Path | None = None
) -> GroupDecisionProblem:
    if not isinstance(doc, Mapping):
        raise ParseError(f"problem: expected a JSON object, got {type(doc).__name__}")
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise ParseError(f"problem: unknown top-level keys {sorted(unknown)}")
    for key in ("scales", "alternatives", "experts", "criteria", "assessments"):
        if key not in doc:
            raise ParseError(f"problem: missing required section '{key}'")

    importance_scale = _parse_scale_ref(doc["scales"], "importance", base_dir)
    quality_scale = _parse_scale_ref(doc["scales"], "quality", base_dir)

    alternatives = _parse_names(doc["alternatives"], "alternatives")

    experts: list[str] = []
    importance: list[Assessment] = []
    for i, node in enumerate(_expect_list(doc["experts"], "experts")):
        here = f"experts[{i}]"
        if not isinstance(node, Mapping):
            raise ParseError(f"{here}: expected an object with 'name' and 'importance'")
        if set(node) - {"name", "importance"}:
            raise ParseError(f"{here}: unknown keys {sorted(set(node) - {'name', 'importance'})}")
        experts.append(_expect_name(node.get("name"), f"{here}.name"))
        importance.append(
            _parse_cell(node.get("importance"), importance_scale, f"{here}.importance")
        )

    criteria: list[str] = []
    weight_columns: list[dict[str, Assessment]] = []
    for j, node in enumerate(_expect_list(doc["criteria"], "criteria")):
        here = f"criteria[{j}]"
        if not isinstance(node, Mapping):
            raise ParseError(f"{here}: expected an object with 'name' and 'weights'")
        if set(node) - {"name", "weights"}:
            raise ParseError(f"{here}: unknown keys {sorted(set(node) - {'name', 'weights'})}")
        criteria.append(_expect_name(node.get("name"), f"{here}.name"))
        weights_node = node.get("weights")
        if not isinstance(weights_node, Mapping):
            raise ParseError(f"{here}.weights: expected an object keyed by expert name")
        column: dict[str, Assessment] = {}
        for expert, cell in weights_node.items():
            if expert not in experts:
                raise ParseError(f"{here}.weights.{expert}: unknown expert '{expert}'")
            column[expert] = _parse_cell(cell, importance_scale, f"{here}.weights.{expert}")
        missing = [e for e in experts if e not in column]
        if missing:
            raise DimensionMismatch(f"{here}.weights: missing experts {missing}")
        weight_columns.append(column)

    assessments_node = doc["assessments"]
    if not isinstance(assessments_node, Mapping):
        raise ParseError("assessments: expected an object keyed by expert name")
    for expert in assessments_node:
        if expert not in experts:
            raise ParseError(f"assessments.{expert}: unknown expert '{expert}'")
    grids: list[tuple[tuple[Assessment, ...], ...]] = []
    for expert in experts:
        if expert not in assessments_node:
            raise DimensionMismatch(f"assessments: missing grid for expert '{expert}'")
        here = f"assessments.{expert}"
        grid_node = _expect_list(assessments_node[expert], here)
        if len(grid_node) != len(alternatives):
            raise DimensionMismatch(
                f"{here}: {len(grid_node)} rows for {len(alternatives)} alternatives"
            )
        grid = []
        for i, row_node in enumerate(grid_node):
            row_path = f"{here}[{i}]"
            row = _expect_list(row_node, row_path)
            if len(row) != len(criteria):
                raise DimensionMismatch(
                    f"{row_path}: {len(row)} cells for {len(criteria)} criteria"
                )
            grid.append(
                tuple(
                    _parse_cell(cell, quality_scale, f"{row_path}[{j}]")
                    for j, cell in enumerate(row)
                )
            )
        grids.append(tuple(grid))

    config = _parse_config(doc.get("config"), "config")

    try:
        return GroupDecisionProblem(
            alternatives=tuple(alternatives),
            criteria=tuple(criteria),
            experts=tuple(experts),
            expert_importance=tuple(importance),
            criterion_weights=tuple(
                tuple(weight_columns[j][expert] for j in range(len(criteria)))
                for expert in experts
            ),
            assessments=tuple(grids),
            importance_scale=importance_scale,
            quality_scale=quality_scale,
            config=config,
        )
    except DimensionMismatch as err:
        raise DimensionMismatch(f"problem: {err}") from err


def _parse_scale_ref(
    scales_node, role: str, base_dir: str | Path | None
) -> LinguisticScale:
    path = f"scales.{role}"
    if not isinstance(scales_node, Mapping):
        raise ParseError("scales: expected an object with 'importance' and 'quality'")
    node = scales_node.get(role)
    if node is None:
        raise ParseError(f"{path}: missing scale binding")
    if isinstance(node, str):
        try:
            return get_builtin(node)
        except UnknownTerm as err:
            raise ParseError(f"{path}: {err}") from err
    if isinstance(node, Mapping) and set(node) == {"file"}:
        ref = Path(node["file"])
        if base_dir is not None and not ref.is_absolute():
            ref = Path(base_dir) / ref
        try:
            text = ref.read_text(encoding="utf-8")
        except OSError as err:
            raise ParseError(f"{path}: cannot read scale file '{node['file']}': {err}") from err
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as err:
            raise ParseError(f"{path}: scale file '{node['file']}': invalid JSON: {err}") from err
        return scale_from_document(doc, path=f"{path}({node['file']})")
    if isinstance(node, Mapping):
        return scale_from_document(node, path=path)
    raise ParseError(f"{path}: expected a builtin name, a file reference or an inline scale")


def _parse_names(node, path: str) -> list[str]:
    names = _expect_list(node, path)
    out = []
    for i, name in enumerate(names):
        out.append(_expect_name(name, f"{path}[{i}]"))
    if len(set(out)) != len(out):
        raise DimensionMismatch(f"{path}: duplicate names")
    return out


def _expect_list(node, path: str) -> list:
    if not isinstance(node, list):
        raise ParseError(f"{path}: expected an array, got {type(node).__name__}")
    if not node:
        raise ParseError(f"{path}: must not be empty")
    return node


def _expect_name(node, path: str) -> str:
    if not isinstance(node, str) or not node.strip():
        raise ParseError(f"{path}: expected a non-empty string")
    return node.strip()


def _parse_cell(node, scale: LinguisticScale, path: str) -> Assessment:
    """A term (validated against the scale, kept as text) or a literal IFN."""
    if isinstance(node, str):
        try:
            scale.resolve(node)
        except UnknownTerm as err:
            raise UnknownTerm(f"{path}: {err}") from err
        return node
    return _parse_ifn(node, path)


def _parse_ifn(node, path: str) -> Ifn:
    if isinstance(node, list) and len(node) == 2:
        raw_mu, raw_nu = node
    elif isinstance(node, Mapping) and set(node) == {"mu", "nu"}:
        raw_mu, raw_nu = node["mu"], node["nu"]
    else:
        raise ParseError(f"{path}: expected a term, a [mu, nu] pair or {{'mu', 'nu'}}")
    if not isinstance(raw_mu, (int, float)) or not isinstance(raw_nu, (int, float)):
        raise ParseError(f"{path}: mu and nu must be numbers")
    try:
        return Ifn(float(raw_mu), float(raw_nu))
    except InvalidIfn as err:
        raise InvalidIfn(f"{path}: {err}") from err


def _parse_config(node, path: str) -> SolverConfig:
    if node is None:
        return SolverConfig()
    if not isinstance(node, Mapping):
        raise ParseError(f"{path}: expected an object")
    unknown = set(node) - _CONFIG_KEYS
    if unknown:
        raise ParseError(f"{path}: unknown keys {sorted(unknown)}")
    kwargs: dict = {}
    if "weight_aggregator" in node:
        kwargs["weight_aggregator"] = _parse_enum(
            node["weight_aggregator"], Aggregator, f"{path}.weight_aggregator"
        )
    if "threshold" in node:
        kwargs["threshold"] = _parse_threshold(node["threshold"], f"{path}.threshold")
    for key in ("expert_degree_metric", "performance_metric"):
        if key in node:
            kwargs[key] = _parse_enum(node[key], Metric, f"{path}.{key}")
    for key in ("ideal", "anti_ideal"):
        if key in node:
            kwargs[key] = _parse_ifn(node[key], f"{path}.{key}")
    return SolverConfig(**kwargs)


def _parse_enum(node, enum_type, path: str):
    if isinstance(node, str):
        for member in enum_type:
            if member.value == node.strip().lower():
                return member
    allowed = ", ".join(member.value for member in enum_type)
    raise ParseError(f"{path}: expected one of {allowed}, got {node!r}")


def _parse_threshold(node, path: str) -> ThresholdSpec:
    if not isinstance(node, Mapping):
        raise ParseError(f"{path}: expected an object with a 'kind'")
    kind = node.get("kind")
    if kind not in KINDS:
        raise ParseError(f"{path}.kind: expected one of {sorted(KINDS)}, got {kind!r}")
    cls, params = KINDS[kind]
    unknown = set(node) - {"kind", *params}
    if unknown:
        raise ParseError(f"{path}: unknown keys {sorted(unknown)} for kind '{kind}'")
    kwargs = {}
    for param in params:
        if param not in node:
            raise ParseError(f"{path}.{param}: required for kind '{kind}'")
        value = node[param]
        if not isinstance(value, (int, float)):
            raise ParseError(f"{path}.{param}: expected a number, got {value!r}")
        kwargs[param] = float(value)
    try:
        return cls(**kwargs)
    except InvalidThresholdParams as err:
        raise InvalidThresholdParams(f"{path}: {err}") from err


def problem_to_document(problem: GroupDecisionProblem) -> dict:
    """Serialize a problem back to its (self-contained) document form.

    Linguistic terms are kept as terms and scales are inlined, so
    parse(emit(parse(doc))) reproduces the parsed problem exactly.
    """

    def cell(value: Assessment):
        return value if isinstance(value, str) else [value.mu, value.nu]

    config = problem.config
    threshold = config.threshold
    kind = next(k for k, (cls, _) in KINDS.items() if isinstance(threshold, cls))
    threshold_doc: dict = {"kind": kind}
    for param in KINDS[kind][1]:
        threshold_doc[param] = getattr(threshold, param)
    return {
        "scales": {
            "importance": scale_to_document(problem.importance_scale),
            "quality": scale_to_document(problem.quality_scale),
        },
        "alternatives": list(problem.alternatives),
        "experts": [
            {"name": name, "importance": cell(value)}
            for name, value in zip(problem.experts, problem.expert_importance)
        ],
        "criteria": [
            {
                "name": name,
                "weights": {
                    expert: cell(problem.criterion_weights[k][j])
                    for k, expert in enumerate(problem.experts)
                },
            }
            for j, name in enumerate(problem.criteria)
        ],
        "assessments": {
            expert: [[cell(value) for value in row] for row in problem.assessments[k]]
            for k, expert in enumerate(problem.experts)
        },
        "config": {
            "weight_aggregator": config.weight_aggregator.value,
            "threshold": threshold_doc,
            "expert_degree_metric": config.expert_degree_metric.value,
            "performance_metric": config.performance_metric.value,
            "ideal": [config.ideal.mu, config.ideal.nu],
            "anti_ideal": [config.anti_ideal.mu, config.anti_ideal.nu],
        },
    }
