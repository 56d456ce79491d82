"""
Edelman--Greene insertion.

Row insertion of ``x`` into an increasing tableau works row by row:

* ``x`` larger than every entry of the row: append it and stop;
* ``x`` equal to some entry ``z``: leave the row alone and insert ``z + 1``
  into the next row;
* otherwise ``x`` replaces the least entry ``z > x`` and ``z`` moves on to
  the next row.

The second case is what separates this from RSK row insertion, and it keeps
the tableau strictly increasing even for non-reduced words.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Iterable

from .permutations import (
    Partition, Word, compose_word, complement_word, inv_count, reverse_word,
    rothe_diagram, top_left_component,
)
from .tableaux import Tableau, transpose

__all__ = [
    "Report", "insert_rows", "eg_insert_letter", "eg_map", "insertion_trace",
    "frozen_region", "is_frozen", "verify_frozen_equals_diagram",
    "verify_symmetries",
]


@dataclass
class Report:
    """Outcome of a verification run; failures are recorded, not raised."""

    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, detail) -> None:
        self.failures.append(detail)

    def merge(self, other: Report) -> None:
        self.checked += other.checked
        self.failures.extend(other.failures)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "failures": [repr(f) for f in self.failures[:20]],
            "failure_count": len(self.failures),
            "notes": self.notes,
        }

    def __str__(self) -> str:
        status = "PASS" if self.ok else f"FAIL ({len(self.failures)})"
        return f"{status} {self.name} [{self.checked} checked]"


def insert_rows(rows: list[list[int]], x: int) -> tuple[int, int]:
    """
    Insert ``x`` into ``rows`` in place; return the new cell (0-indexed).

    This is the hot loop behind every sweep, so it works on plain lists.
    """
    i = 0
    while i < len(rows):
        row = rows[i]
        if x > row[-1]:
            row.append(x)
            return i, len(row) - 1
        k = bisect_left(row, x)
        z = row[k]
        if z == x:
            x = z + 1
        else:
            row[k] = x
            x = z
        i += 1
    rows.append([x])
    return i, 0


def eg_insert_letter(p: Tableau, x: int) -> tuple[Tableau, tuple[int, int]]:
    """Insert ``x`` into ``p``; return the new tableau and the added cell (1-indexed)."""
    if x < 1:
        raise ValueError(f"letter must be positive, got {x}")
    rows = [list(r) for r in p.rows]
    i, j = insert_rows(rows, x)
    out = Tableau(tuple(tuple(r) for r in rows))
    assert out.is_increasing(), out
    return out, (i + 1, j + 1)


def _record(w: Iterable[int]) -> tuple[list[list[int]], list[list[int]]]:
    prows: list[list[int]] = []
    qrows: list[list[int]] = []
    for k, x in enumerate(w, 1):
        i, _ = insert_rows(prows, x)
        if i == len(qrows):
            qrows.append([])
        qrows[i].append(k)
    return prows, qrows


def eg_map(w: Iterable[int]) -> tuple[Tableau, Tableau]:
    """
    The pair ``(P(w), Q(w))``.

    >>> p, q = eg_map((3, 2, 1, 2, 3, 2))
    >>> str(p), str(q)
    ('1,2,3/2,3/3', '1,4,5/2,6/3')
    """
    w = tuple(w)
    if any(x < 1 for x in w):
        raise ValueError(f"letters must be positive: {w}")
    prows, qrows = _record(w)
    return Tableau(tuple(map(tuple, prows))), Tableau(tuple(map(tuple, qrows)))


def frozen_region(p: Tableau) -> Partition:
    """
    Shape of the cells with ``P[i, j] == i + j - 1``.

    In an increasing tableau those cells always form a Young diagram; a
    violation means ``p`` is not a genuine increasing tableau.
    """
    shape = []
    for i, row in enumerate(p.rows, 1):
        frozen = [j for j, v in enumerate(row, 1) if v == i + j - 1]
        length = len(frozen)
        if frozen != list(range(1, length + 1)):
            raise AssertionError(f"frozen cells of row {i} are not left-justified in {p}")
        if length == 0:
            break
        shape.append(length)
    # rows below the first unfrozen row stay unfrozen
    for i in range(len(shape) + 1, len(p.rows) + 1):
        if p.rows[i - 1][0] == i:
            raise AssertionError(f"frozen cells do not form a Young diagram in {p}")
    if any(a < b for a, b in zip(shape, shape[1:])):
        raise AssertionError(f"frozen region {shape} is not a partition")
    return tuple(shape)


def is_frozen(p: Tableau) -> bool:
    return frozen_region(p) == p.shape


def insertion_trace(w: Iterable[int]) -> list[tuple[Tableau, Partition]]:
    """``(P^(k), frozen shape of P^(k))`` for ``k = 1..len(w)``."""
    rows: list[list[int]] = []
    out = []
    for x in w:
        insert_rows(rows, x)
        p = Tableau(tuple(map(tuple, rows)))
        out.append((p, frozen_region(p)))
    return out


def verify_frozen_equals_diagram(w: Word, n: int) -> Report:
    """
    Check that the top-left diagram component of every prefix product has
    the shape of the frozen region of the prefix's insertion tableau.
    """
    w = tuple(w)
    if inv_count(compose_word(w, n)) != len(w):
        raise ValueError(f"{w} is not reduced in S_{n}")
    rep = Report("frozen region = top-left diagram component")
    perm = list(range(1, n + 1))
    rows: list[list[int]] = []
    for k in range(len(w) + 1):
        if k:
            x = w[k - 1]
            perm[x - 1], perm[x] = perm[x], perm[x - 1]
            insert_rows(rows, x)
        lam = top_left_component(rothe_diagram(tuple(perm)))
        lam_f = frozen_region(Tableau(tuple(map(tuple, rows))))
        rep.checked += 1
        if lam != lam_f:
            rep.fail((w[:k], lam, lam_f))
    return rep


def verify_symmetries(w: Word, n: int) -> Report:
    """
    ``P(w^rev) = P(w)^t`` for reduced ``w``; when ``w`` is a sorting network
    also ``Q(w^rev) = Q(w)^S`` and ``Q(w-bar) = Q(w)^t``.

    The evacuation identity is only a statement about networks: ``Q(w^rev)``
    has the transposed shape of ``Q(w)``, so for a general reduced word such
    as ``12`` it cannot hold.  Off networks it is recorded in the notes.
    """
    from .promotion import evacuation

    w = tuple(w)
    sigma = compose_word(w, n)
    if inv_count(sigma) != len(w):
        raise ValueError(f"{w} is not reduced in S_{n}")
    rep = Report("reverse/complement symmetries")
    p, q = eg_map(w)
    pr, qr = eg_map(reverse_word(w))
    rep.checked += 1
    if pr != transpose(p):
        rep.fail(("P(w^rev) != P(w)^t", w))
    if len(w) == n * (n - 1) // 2:
        _, qc = eg_map(complement_word(w, n))
        rep.checked += 2
        if qr != evacuation(q):
            rep.fail(("Q(w^rev) != Q(w)^S", w))
        if qc != transpose(q):
            rep.fail(("Q(w-bar) != Q(w)^t", w))
    else:
        rep.notes["q_reverse_holds"] = qr == evacuation(q)
        rep.notes["network_checks"] = "skipped: not a sorting network"
    return rep
