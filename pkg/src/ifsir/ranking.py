"""Ranking rules: flow orders, their intersection, and the decision map.

The superiority flows are ordered descending, the inferiority flows ascending
(a low inferiority flow is good). Intersecting the two orders classifies each
pair of alternatives as preference, indifference or incomparability, and when
no incomparability remains the relations collapse back into a single stratified
ranking.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Sequence

from .ifn import ranking_key

if TYPE_CHECKING:  # imported for annotations only; engine imports this module
    from .engine import FlowTable

Strata = tuple[tuple[str, ...], ...]


class Relation(enum.Enum):
    """Standing of a row alternative relative to a column alternative.

    ``PREFERRED_BY`` only ever appears as the mirror cell of a
    ``PREFERRED_OVER``; per unordered pair exactly one of preference (with a
    direction), indifference or incomparability holds.
    """

    PREFERRED_OVER = "P"
    PREFERRED_BY = "p"
    INDIFFERENT_TO = "I"
    INCOMPARABLE_WITH = "R"


@dataclass(frozen=True)
class RelationTable:
    """Pairwise relations as a square matrix over a fixed alternative order."""

    alternatives: tuple[str, ...]
    cells: tuple[tuple[Relation, ...], ...]

    def between(self, a: str, b: str) -> Relation:
        i = self.alternatives.index(a)
        k = self.alternatives.index(b)
        return self.cells[i][k]

    def pairs(self) -> Iterable[tuple[str, str, Relation]]:
        """Each unordered pair once; preference pairs oriented winner first."""
        names = self.alternatives
        for i in range(len(names)):
            for k in range(i + 1, len(names)):
                rel = self.cells[i][k]
                if rel is Relation.PREFERRED_BY:
                    yield names[k], names[i], Relation.PREFERRED_OVER
                else:
                    yield names[i], names[k], rel


@dataclass(frozen=True)
class RankingOutcome:
    """Both flow orders, the intersected relations, and the stratified
    complete ranking when one exists (``None`` under incomparability)."""

    s_order: Strata
    i_order: Strata
    relations: RelationTable
    complete: Strata | None


def _stratify(names: Sequence[str], keyed: Sequence[tuple[float, float]], reverse: bool) -> Strata:
    order = sorted(range(len(names)), key=lambda i: keyed[i], reverse=reverse)
    strata: list[tuple[str, ...]] = []
    group: list[str] = []
    previous: tuple[float, float] | None = None
    for i in order:
        if previous is not None and keyed[i] != previous:
            strata.append(tuple(group))
            group = []
        group.append(names[i])
        previous = keyed[i]
    if group:
        strata.append(tuple(group))
    return tuple(strata)


def s_ranking(flow_table: "FlowTable") -> Strata:
    """Descending order of the superiority flows; ties share a stratum."""
    entries = list(flow_table)
    return _stratify(
        [e.alternative for e in entries], [ranking_key(e.s_flow) for e in entries], reverse=True
    )


def i_ranking(flow_table: "FlowTable") -> Strata:
    """Ascending order of the inferiority flows (lower flow ranks better)."""
    entries = list(flow_table)
    return _stratify(
        [e.alternative for e in entries], [ranking_key(e.i_flow) for e in entries], reverse=False
    )


def _positions(order: Strata) -> dict[str, int]:
    return {name: depth for depth, stratum in enumerate(order) for name in stratum}


def combine(
    s_order: Strata, i_order: Strata, alternatives: Sequence[str] | None = None
) -> RelationTable:
    """Intersect the two rankings into pairwise relations.

    Preference needs a strict win in at least one order and no loss in the
    other; ties in both mean indifference; a split verdict means
    incomparability.
    """
    s_pos = _positions(s_order)
    i_pos = _positions(i_order)
    if set(s_pos) != set(i_pos):
        raise ValueError("s_order and i_order cover different alternatives")
    names = tuple(alternatives) if alternatives is not None else tuple(
        name for stratum in s_order for name in stratum
    )
    if set(names) != set(s_pos):
        raise ValueError("alternatives do not match the ranked names")

    def classify(a: str, b: str) -> Relation:
        s_cmp = s_pos[a] - s_pos[b]  # negative: a ranks better
        i_cmp = i_pos[a] - i_pos[b]
        if s_cmp == 0 and i_cmp == 0:
            return Relation.INDIFFERENT_TO
        if s_cmp <= 0 and i_cmp <= 0:
            return Relation.PREFERRED_OVER
        if s_cmp >= 0 and i_cmp >= 0:
            return Relation.PREFERRED_BY
        return Relation.INCOMPARABLE_WITH

    cells = tuple(
        tuple(
            Relation.INDIFFERENT_TO if a == b else classify(a, b) for b in names
        )
        for a in names
    )
    return RelationTable(names, cells)


def complete_ranking(relations: RelationTable) -> Strata | None:
    """Collapse the relations back into strata when they form a total preorder.

    Returns ``None`` if any pair is incomparable or the preference digraph is
    not a consistent linear order of the indifference classes; the relation
    table itself then remains the decision map.
    """
    names = relations.alternatives
    n = len(names)
    for row in relations.cells:
        if Relation.INCOMPARABLE_WITH in row:
            return None

    # indifference classes; verify transitivity by checking class coherence
    classes: list[list[int]] = []
    assigned: dict[int, int] = {}
    for i in range(n):
        if i in assigned:
            continue
        members = [k for k in range(n) if relations.cells[i][k] is Relation.INDIFFERENT_TO]
        for a in members:
            for b in members:
                if relations.cells[a][b] is not Relation.INDIFFERENT_TO:
                    return None
            assigned[a] = len(classes)
        classes.append(members)

    # every cross-class pair must be oriented consistently with a strict
    # total order of the classes
    wins = [0] * len(classes)
    for ci, members in enumerate(classes):
        for ck in range(len(classes)):
            if ci == ck:
                continue
            verdicts = {
                relations.cells[a][b] for a in members for b in classes[ck]
            }
            if verdicts == {Relation.PREFERRED_OVER}:
                wins[ci] += 1
            elif verdicts != {Relation.PREFERRED_BY}:
                return None
    ordered = sorted(range(len(classes)), key=lambda ci: wins[ci], reverse=True)
    if [wins[ci] for ci in ordered] != list(range(len(classes) - 1, -1, -1)):
        return None
    return tuple(tuple(names[i] for i in classes[ci]) for ci in ordered)


def rank(flow_table: "FlowTable") -> RankingOutcome:
    """Run the whole ranking stage on a flow table."""
    s_order = s_ranking(flow_table)
    i_order = i_ranking(flow_table)
    relations = combine(
        s_order, i_order, [entry.alternative for entry in flow_table]
    )
    return RankingOutcome(s_order, i_order, relations, complete_ranking(relations))
