"""
Elementary promotion on partially labelled tableaux.

One promotion step removes the largest label and slides labels along its
evacuation path: starting at the largest label, repeatedly step to whichever
of the left and upper neighbours carries the larger label, until neither
carries one.  Each label then moves one step along the path towards the
removed one, and the last cell of the path is left unlabelled.

Iterating until every label is gone yields the evacuation of a standard
tableau (the step at which each cell empties) and, for staircase shapes,
the inverse of the Edelman--Greene map (the columns where each path started,
read backwards).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .permutations import Word
from .tableaux import Tableau, column_word, staircase

__all__ = [
    "PartialTableau", "Promotion", "evacuation_path", "promote",
    "promotion_chain", "evacuation", "eg_inverse", "right_slide_total",
]

Label = Optional[int]


@dataclass(frozen=True)
class PartialTableau:
    """A Young diagram with some cells labelled; ``None`` marks an empty cell."""

    rows: tuple[tuple[Label, ...], ...]

    @classmethod
    def from_tableau(cls, t: Tableau) -> PartialTableau:
        return cls(t.rows)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def label(self, i: int, j: int) -> Label:
        """Label at 1-indexed ``(i, j)``; ``None`` off the diagram or if empty."""
        if 1 <= i <= len(self.rows) and 1 <= j <= len(self.rows[i - 1]):
            return self.rows[i - 1][j - 1]
        return None

    def labels(self) -> dict[tuple[int, int], int]:
        return {
            (i, j): v
            for i, r in enumerate(self.rows, 1)
            for j, v in enumerate(r, 1)
            if v is not None
        }

    def is_empty(self) -> bool:
        return all(v is None for r in self.rows for v in r)

    def to_json(self) -> str:
        return json.dumps({"shape": list(self.shape), "rows": [list(r) for r in self.rows]})

    @classmethod
    def from_json(cls, text: str) -> PartialTableau:
        data = json.loads(text)
        return cls(tuple(tuple(r) for r in data["rows"]))

    def __str__(self) -> str:
        return "/".join(",".join("." if v is None else str(v) for v in r) for r in self.rows)


class Promotion(NamedTuple):
    tableau: PartialTableau
    first_cell: tuple[int, int]
    right_slides: int
    down_slides: int


def evacuation_path(t: PartialTableau) -> list[tuple[int, int]]:
    labels = t.labels()
    if not labels:
        raise ValueError("evacuation path of an unlabelled tableau")
    cell = max(labels, key=labels.__getitem__)
    path = [cell]
    while True:
        i, j = cell
        left, up = t.label(i, j - 1), t.label(i - 1, j)
        if left is None and up is None:
            return path
        assert left != up
        if up is None or (left is not None and left > up):
            cell = (i, j - 1)
        else:
            cell = (i - 1, j)
        path.append(cell)


def promote(t: PartialTableau) -> Promotion:
    """One elementary promotion step, with its slide counts."""
    path = evacuation_path(t)
    rows = [list(r) for r in t.rows]
    right = down = 0
    for (i, j), (pi, pj) in zip(path, path[1:]):
        rows[i - 1][j - 1] = rows[pi - 1][pj - 1]
        if pi == i:
            right += 1
        else:
            down += 1
    ei, ej = path[-1]
    rows[ei - 1][ej - 1] = None
    return Promotion(PartialTableau(tuple(map(tuple, rows))), path[0], right, down)


def promotion_chain(t: Tableau | PartialTableau) -> list[Promotion]:
    """Promote until no label is left; one entry per step."""
    cur = t if isinstance(t, PartialTableau) else PartialTableau.from_tableau(t)
    out = []
    while not cur.is_empty():
        step = promote(cur)
        out.append(step)
        cur = step.tableau
    return out


def evacuation(t: Tableau) -> Tableau:
    """
    Schutzenberger's evacuation: cell ``(i, j)`` gets ``k`` when it empties
    at the ``k``-th promotion step.
    """
    if not t.is_standard():
        raise ValueError("evacuation needs a standard tableau")
    out = [[0] * len(r) for r in t.rows]
    cur = PartialTableau.from_tableau(t)
    for k in range(1, t.size + 1):
        step = promote(cur)
        emptied = [
            c for c, v in _cells(cur) if v is not None and step.tableau.label(*c) is None
        ]
        assert len(emptied) == 1
        i, j = emptied[0]
        out[i - 1][j - 1] = k
        cur = step.tableau
    return Tableau(tuple(map(tuple, out)))


def _cells(t: PartialTableau):
    for i, r in enumerate(t.rows, 1):
        for j, v in enumerate(r, 1):
            yield (i, j), v


def _check_staircase(q: Tableau) -> None:
    if q.shape != staircase(len(q.shape) + 1) or not q.is_standard():
        raise ValueError(f"expected a standard tableau of staircase shape, got {q.shape}")


def eg_inverse(q: Tableau) -> Word:
    """
    The sorting network with recording tableau ``q``.

    >>> eg_inverse(Tableau.of((1, 4, 5), (2, 6), (3,)))
    (3, 2, 1, 2, 3, 2)
    """
    _check_staircase(q)
    cols = [step.first_cell[1] for step in promotion_chain(q)]
    return tuple(reversed(cols))


def right_slide_total(q: Tableau) -> int:
    """Total number of right slides while clearing ``q`` by promotion."""
    _check_staircase(q)
    total = sum(step.right_slides for step in promotion_chain(q))
    assert total == sum(eg_inverse(q)) - sum(column_word(q))
    return total
