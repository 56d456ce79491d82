"""
Insertion tableaux of vexillary (2143-avoiding) permutations, read off
their Rothe diagrams.

``t0_construction`` stacks ``x, x+1, ..., x+r_x-1`` in column ``x``, where
``r_x`` is the Lehmer code; ``t_construction`` left-justifies its rows.  For
vexillary permutations the result is the common insertion tableau of all
reduced words.  ``delta_map`` goes the other way, sending the cell ``(i, j)``
holding ``(i + j - 1) + k`` to ``(i + k, j + k)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .insertion import Report, eg_map
from .permutations import (
    CellSet, Perm, is_vexillary, lehmer_code, perm_from_diagram, rank,
    rothe_diagram,
)
from .tableaux import Tableau

__all__ = [
    "ColumnArrangement", "NotVexillaryError", "t0_construction",
    "t_construction", "delta_map", "delta_shifts", "verify_vex_theorem",
    "delta_preimage_perm",
]


class NotVexillaryError(ValueError):
    pass


@dataclass(frozen=True)
class ColumnArrangement:
    """Column ``x`` holds the run ``x, x+1, ..., x+length-1`` from row 1 down."""

    columns: tuple[tuple[int, int], ...]  # (column x, run length), sorted by x

    def heights(self) -> dict[int, int]:
        return dict(self.columns)

    def entry(self, row: int, col: int) -> int | None:
        length = self.heights().get(col, 0)
        return col + row - 1 if row <= length else None

    def grid(self) -> str:
        """Sparse text grid, ``.`` for cells with no entry."""
        h = self.heights()
        if not h:
            return "(empty)"
        width = len(str(max(x + r - 1 for x, r in h.items())))
        ncols = max(h)
        lines = []
        for row in range(1, max(h.values()) + 1):
            cells = [self.entry(row, c) for c in range(1, ncols + 1)]
            lines.append(" ".join("." * width if v is None else str(v).rjust(width) for v in cells).rstrip())
        return "\n".join(lines)


def t0_construction(sigma: Perm) -> ColumnArrangement:
    code = lehmer_code(sigma)
    return ColumnArrangement(tuple((x, r) for x, r in enumerate(code, 1) if r > 0))


def t_construction(sigma: Perm) -> Tableau:
    """Left-justified rows of the column arrangement; vexillary input only."""
    if not is_vexillary(sigma):
        raise NotVexillaryError(f"{sigma} contains 2143")
    cols = t0_construction(sigma).columns
    depth = max((r for _, r in cols), default=0)
    rows = tuple(
        tuple(x + row - 1 for x, r in cols if r >= row) for row in range(1, depth + 1)
    )
    t = Tableau(rows)
    assert t.is_increasing(), t
    return t


def delta_shifts(p: Tableau) -> dict[tuple[int, int], int]:
    """``k = P[i, j] - (i + j - 1)`` for every cell."""
    shifts = {(i, j): v - (i + j - 1) for (i, j), v in p.items()}
    bad = [c for c, k in shifts.items() if k < 0]
    if bad:
        raise AssertionError(f"entries below i + j - 1 at {bad} in {p}")
    return shifts


def delta_map(p: Tableau) -> CellSet:
    image = [(i + k, j + k) for (i, j), k in delta_shifts(p).items()]
    out = frozenset(image)
    assert len(out) == len(image), f"delta is not injective on {p}"
    return out


def delta_preimage_perm(p: Tableau) -> Perm | None:
    """The permutation whose diagram is ``delta(p)``, if there is one."""
    return perm_from_diagram(delta_map(p))


def verify_vex_theorem(sigma: Perm, words=None, limit: int | None = None) -> Report:
    """
    For each given reduced word of ``sigma`` (all of them by default, or the
    first ``limit`` in lexicographic order) check ``delta(P(w)) = D(sigma)``,
    that every shift ``k`` equals the rank of its image cell, and that
    ``P(w) = T(sigma)``.
    """
    from .networks import enumerate_reduced_words

    if not is_vexillary(sigma):
        raise NotVexillaryError(f"{sigma} contains 2143")
    rep = Report(f"vexillary diagram correspondence for {''.join(map(str, sigma))}")
    diagram = rothe_diagram(sigma)
    target = t_construction(sigma)
    if words is None:
        words = enumerate_reduced_words(sigma)
    seen_p: dict[Tableau, int] = {}
    for idx, w in enumerate(words):
        if limit is not None and idx >= limit:
            rep.notes["sampled"] = limit
            break
        p, _ = eg_map(w)
        rep.checked += 1
        if p in seen_p:
            continue  # already checked this tableau
        seen_p[p] = idx
        if p != target:
            rep.fail(("P(w) != T(sigma)", w))
        shifts = delta_shifts(p)
        if delta_map(p) != diagram:
            rep.fail(("delta(P(w)) != D(sigma)", w))
            continue
        for (i, j), k in shifts.items():
            if rank(sigma, i + k, j + k) != k:
                rep.fail(("shift != rank", w, (i, j)))
    rep.notes["distinct_P"] = len(seen_p)
    return rep
