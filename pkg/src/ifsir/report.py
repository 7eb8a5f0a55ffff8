"""Result reporting: human tables, machine JSON, and the DOT decision map.

The human format rounds every IFN to four decimals; the machine format is
JSON with full-precision numbers and embeds the problem document, so a
machine report can be re-ingested and re-solved bit-identically.
"""

from __future__ import annotations

import json
from typing import Iterable

from .engine import SolveResult
from .ifn import Ifn
from .problemfile import problem_to_document
from .ranking import Relation, Strata


def emit_report(result: SolveResult, fmt: str = "human") -> str:
    if fmt == "human":
        return _human_report(result)
    if fmt == "machine":
        return json.dumps(_machine_report(result), indent=2) + "\n"
    raise ValueError(f"unknown report format {fmt!r} (expected 'human' or 'machine')")


def format_strata(strata: Strata) -> str:
    return " > ".join("{" + ", ".join(group) + "}" for group in strata)


def _human_report(result: SolveResult) -> str:
    problem = result.problem
    out: list[str] = []
    out.append("IF-SIR group decision report")
    out.append("=" * 28)
    out.append(f"alternatives: {', '.join(problem.alternatives)}")
    out.append(f"criteria:     {', '.join(problem.criteria)}")
    out.append(f"experts:      {', '.join(problem.experts)}")
    out.append("")
    out.append("xi = (" + ", ".join(f"{v:.4f}" for v in result.degrees) + ")")
    out.append("")

    name_width = max(len(n) for n in problem.alternatives + problem.criteria)

    out.append("group assessment matrix (alternatives x criteria)")
    header = " " * (name_width + 4) + "  ".join(f"{c:^16}" for c in problem.criteria)
    out.append(header.rstrip())
    for name, row in zip(problem.alternatives, result.group.assessments):
        out.append(f"  {name:<{name_width}}  " + "  ".join(f"{str(v):^16}" for v in row))
    out.append("")

    out.append("group criterion weights")
    for name, value in zip(problem.criteria, result.group.weights):
        out.append(f"  {name:<{name_width}} {value}")
    out.append("")

    out.append("performance matrix")
    out.append((" " * (name_width + 4) + "  ".join(f"{c:^6}" for c in problem.criteria)).rstrip())
    for name, row in zip(problem.alternatives, result.performance.values):
        out.append(f"  {name:<{name_width}}  " + "  ".join(f"{v:.4f}" for v in row))
    out.append("")

    for label, matrix in (
        ("superiority index", result.indices.superiority),
        ("inferiority index", result.indices.inferiority),
    ):
        out.append(label)
        for name, row in zip(problem.alternatives, matrix):
            out.append(f"  {name:<{name_width}}  " + "  ".join(f"{v:.4f}" for v in row))
        out.append("")

    out.append("flows")
    out.append(
        f"  {'':{name_width}}  {'s_flow':^18} {'s_score':>8}  {'i_flow':^18} {'i_score':>8}"
    )
    for entry in result.flow_table:
        out.append(
            f"  {entry.alternative:<{name_width}}  {str(entry.s_flow):^18} "
            f"{entry.s_score:>8.4f}  {str(entry.i_flow):^18} {entry.i_score:>8.4f}"
        )
    out.append("")

    outcome = result.outcome
    out.append(f"S-ranking: {format_strata(outcome.s_order)}")
    out.append(f"I-ranking: {format_strata(outcome.i_order)}")
    out.append("")
    out.append("pairwise relations (row vs column: P preferred, p dominated,")
    out.append("I indifferent, R incomparable)")
    names = outcome.relations.alternatives
    out.append((" " * (name_width + 4) + " ".join(f"{n:^{name_width}}" for n in names)).rstrip())
    for name, row in zip(names, outcome.relations.cells):
        cells = " ".join(
            f"{'-' if name == other else rel.value:^{name_width}}"
            for other, rel in zip(names, row)
        )
        out.append(f"  {name:<{name_width}}  " + cells.rstrip())
    out.append("")
    if outcome.complete is not None:
        out.append(f"complete ranking: {format_strata(outcome.complete)}")
    else:
        out.append("complete ranking: none (incomparable pairs remain; see relations)")
    out.append("")
    return "\n".join(out)


def _pair(value: Ifn) -> list[float]:
    return [value.mu, value.nu]


def _machine_report(result: SolveResult) -> dict:
    outcome = result.outcome
    return {
        "problem": problem_to_document(result.problem),
        "expert_degrees": list(result.degrees),
        "group_assessments": [[_pair(v) for v in row] for row in result.group.assessments],
        "group_weights": [_pair(v) for v in result.group.weights],
        "performance": [list(row) for row in result.performance.values],
        "superiority_index": [list(row) for row in result.indices.superiority],
        "inferiority_index": [list(row) for row in result.indices.inferiority],
        "flows": [
            {
                "alternative": e.alternative,
                "s_flow": _pair(e.s_flow),
                "s_score": e.s_score,
                "i_flow": _pair(e.i_flow),
                "i_score": e.i_score,
            }
            for e in result.flow_table
        ],
        "s_ranking": [list(group) for group in outcome.s_order],
        "i_ranking": [list(group) for group in outcome.i_order],
        "relations": [
            {"a": a, "b": b, "relation": rel.value} for a, b, rel in outcome.relations.pairs()
        ],
        "complete_ranking": None
        if outcome.complete is None
        else [list(group) for group in outcome.complete],
    }


def emit_dot(result: SolveResult) -> str:
    """Decision map in DOT: solid arrows for (transitively reduced) preference,
    dashed "I" edges for indifference, dotted "R" edges for incomparability.
    Node labels carry both flow scores."""
    outcome = result.outcome
    names = outcome.relations.alternatives
    scores = {e.alternative: (e.s_score, e.i_score) for e in result.flow_table}

    preferred = [
        (a, b)
        for a, b, rel in outcome.relations.pairs()
        if rel is Relation.PREFERRED_OVER
    ]
    reduced = _transitive_reduction(names, preferred)

    lines = ["digraph decision_map {", "  rankdir=LR;", "  node [shape=box];"]
    for name in names:
        s, i = scores[name]
        lines.append(f'  {_quote(name)} [label="{_escape(name)}\\ns={s:.4f}\\ni={i:.4f}"];')
    for a, b in reduced:
        lines.append(f"  {_quote(a)} -> {_quote(b)};")
    for a, b, rel in outcome.relations.pairs():
        if rel is Relation.INDIFFERENT_TO:
            lines.append(f'  {_quote(a)} -> {_quote(b)} [style=dashed, dir=none, label="I"];')
        elif rel is Relation.INCOMPARABLE_WITH:
            lines.append(f'  {_quote(a)} -> {_quote(b)} [style=dotted, dir=none, label="R"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _transitive_reduction(
    names: Iterable[str], edges: list[tuple[str, str]]
) -> list[tuple[str, str]]:
    """Drop every preference edge implied by a longer path. The preference
    digraph is acyclic by construction (it embeds into a strict order)."""
    successors: dict[str, set[str]] = {n: set() for n in names}
    for a, b in edges:
        successors[a].add(b)

    def reachable(start: str) -> set[str]:
        seen: set[str] = set()
        stack = [start]
        while stack:
            node = stack.pop()
            for nxt in successors[node]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return seen

    kept = []
    for a, b in edges:
        if not any(b in reachable(mid) for mid in successors[a] if mid != b):
            kept.append((a, b))
    return kept


def _escape(name: str) -> str:
    return name.replace("\\", "\\\\").replace('"', '\\"')


def _quote(name: str) -> str:
    return f'"{_escape(name)}"'
