"""
Posets of words sharing a recording tableau.

For a standard tableau ``Q``, ``W_Q`` is the set of words ``w`` (reduced or
not) with ``Q(w) = Q`` and ``P(w)`` frozen, ordered letterwise.  The column
word of ``Q`` sits at the bottom, and for staircase ``Q`` the sorting
network ``EG^-1(Q)`` is the one reduced element.  The height ``l_Q`` is the
longest chain from the column word up to that network.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .insertion import Report, insert_rows
from .permutations import Word, compose_word, inv_count
from .promotion import eg_inverse, evacuation
from .tableaux import (
    Tableau, column_word, descent_set, enumerate_syt,
    is_antidiagonal_increasing, is_shifted_staircase, staircase, transpose,
)

__all__ = [
    "WordPoset", "alphabet_bound", "enumerate_WQ", "build_poset",
    "interval_height", "height_of", "eta_table", "check_descents",
    "check_minimal", "check_conjecture_height", "check_consequences",
    "weak_descents", "worker_count", "height_records", "HeightRecord",
]

DEFAULT_CAP = 12


def alphabet_bound(shape) -> int:
    """Largest entry of the frozen tableau of ``shape``: ``max(i + shape[i] - 1)``."""
    return max((i + r - 1 for i, r in enumerate(shape, 1)), default=0)


def enumerate_WQ(q: Tableau, bound: int | None = None, cap: int = DEFAULT_CAP) -> list[Word]:
    """
    All words over ``1..bound`` with recording tableau ``q`` and a frozen
    insertion tableau, in lexicographic order.

    Branches die as soon as a prefix's recording tableau disagrees with
    ``q``; nothing else is pruned, so a larger ``bound`` is a genuine check
    of the default one.
    """
    if not q.is_standard():
        raise ValueError("W_Q needs a standard tableau")
    m = q.size
    if m > cap:
        raise ValueError(f"|Q| = {m} exceeds cap {cap}")
    if bound is None:
        bound = alphabet_bound(q.shape)
    target = [(-1, -1)] * (m + 1)
    for (i, j), v in q.items():
        target[v] = (i - 1, j - 1)
    out: list[Word] = []
    word: list[int] = []

    def dfs(rows: list[list[int]]) -> None:
        k = len(word)
        if k == m:
            if all(v == i + j + 1 for i, r in enumerate(rows) for j, v in enumerate(r)):
                out.append(tuple(word))
            return
        for x in range(1, bound + 1):
            child = [r[:] for r in rows]
            if insert_rows(child, x) == target[k + 1]:
                word.append(x)
                dfs(child)
                word.pop()

    dfs([])
    return out


def _leq_matrix(elems: np.ndarray) -> np.ndarray:
    """``M[a, b]`` iff ``elems[a] <= elems[b]`` letterwise."""
    return (elems[:, None, :] <= elems[None, :, :]).all(axis=2)


@dataclass
class WordPoset:
    q: Tableau
    elements: list[Word]
    covers: set[tuple[Word, Word]] = field(default_factory=set)

    def __post_init__(self):
        self._index = {w: k for k, w in enumerate(self.elements)}
        width = self.q.size
        self._array = np.array(self.elements, dtype=np.int64).reshape(len(self.elements), width)

    def __contains__(self, w) -> bool:
        return tuple(w) in self._index

    def __len__(self) -> int:
        return len(self.elements)

    def leq(self, v: Word, w: Word) -> bool:
        return all(a <= b for a, b in zip(v, w))

    def minimal_elements(self) -> list[Word]:
        m = _leq_matrix(self._array)
        np.fill_diagonal(m, False)
        return [w for k, w in enumerate(self.elements) if not m[:, k].any()]

    def maximal_elements(self) -> list[Word]:
        m = _leq_matrix(self._array)
        np.fill_diagonal(m, False)
        return [w for k, w in enumerate(self.elements) if not m[k, :].any()]

    def reduced_elements(self) -> list[Word]:
        n = max((max(w) for w in self.elements if w), default=0) + 1
        return [w for w in self.elements if inv_count(compose_word(w, n)) == len(w)]

    def to_dot(self) -> str:
        name = {w: "".join(map(str, w)) if all(x < 10 for x in w) else " ".join(map(str, w))
                for w in self.elements}
        lines = ["digraph P_Q {", "  rankdir=BT;"]
        for w in self.elements:
            lines.append(f'  "{name[w]}";')
        for v, w in sorted(self.covers):
            lines.append(f'  "{name[v]}" -> "{name[w]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_poset(q: Tableau, bound: int | None = None, cap: int = DEFAULT_CAP) -> WordPoset:
    """``W_Q`` with the cover relations of the letterwise order restricted to it."""
    elems = enumerate_WQ(q, bound=bound, cap=cap)
    poset = WordPoset(q, elems)
    if elems:
        less = _leq_matrix(poset._array)
        np.fill_diagonal(less, False)
        li = less.astype(np.int64)
        through = (li @ li) > 0
        cov = less & ~through
        poset.covers = {(elems[a], elems[b]) for a, b in zip(*np.nonzero(cov))}
    return poset


def height_of(elems: np.ndarray) -> int:
    """Length of the longest chain among the rows of ``elems``."""
    if len(elems) == 0:
        return 0
    order = np.argsort(elems.sum(axis=1), kind="stable")
    arr = elems[order]
    depth = np.zeros(len(arr), dtype=np.int64)
    for k in range(1, len(arr)):
        below = (arr[:k] <= arr[k]).all(axis=1) & (arr[:k] != arr[k]).any(axis=1)
        if below.any():
            depth[k] = depth[:k][below].max() + 1
    return int(depth.max())


def interval_height(poset: WordPoset, bottom: Word, top: Word) -> int:
    """Longest chain, counted in edges, inside ``[bottom, top]`` of the poset."""
    bottom, top = tuple(bottom), tuple(top)
    if bottom not in poset or top not in poset:
        raise ValueError("interval endpoints must lie in the poset")
    if not poset.leq(bottom, top):
        raise ValueError(f"{bottom} and {top} do not bound an interval")
    arr = poset._array
    inside = (arr >= np.array(bottom)).all(axis=1) & (arr <= np.array(top)).all(axis=1)
    return height_of(arr[inside])


def _staircase_n(q: Tableau) -> int:
    n = len(q.shape) + 1
    if q.shape != staircase(n):
        raise ValueError(f"shape {q.shape} is not a staircase")
    return n


@dataclass(frozen=True)
class HeightRecord:
    """Everything the proposition checks need about one staircase ``Q``."""

    q: Tableau
    size: int
    height: int
    slide_sum: int
    top_is_maximal: bool
    maximal_count: int
    bottom_ok: bool
    descents_ok: bool
    reduced_count: int


def _height_record(q: Tableau) -> HeightRecord:
    poset = WordPoset(q, enumerate_WQ(q))
    bottom, top = column_word(q), eg_inverse(q)
    maximal = poset.maximal_elements()
    minimal = poset.minimal_elements()
    des = descent_set(q)
    return HeightRecord(
        q=q,
        size=len(poset),
        height=interval_height(poset, bottom, top),
        slide_sum=sum(top) - sum(bottom),
        top_is_maximal=top in maximal,
        maximal_count=len(maximal),
        bottom_ok=minimal == [bottom],
        descents_ok=all(weak_descents(w) == des for w in poset.elements),
        reduced_count=len(poset.reduced_elements()),
    )


def worker_count() -> int:
    env = os.environ.get("EGKIT_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def height_records(n: int, long_run: bool = False) -> list[HeightRecord]:
    """One record per ``Q`` in ``SYT(sc_n)``, in canonical tableau order."""
    if n > 5 and not long_run:
        raise ValueError(f"n = {n} needs long_run=True")
    tableaux = enumerate_syt(staircase(n), cap=comb(n, 2))
    workers = worker_count()
    if workers > 1 and len(tableaux) > 64:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(_height_record, tableaux, chunksize=16))
    return [_height_record(q) for q in tableaux]


def eta_table(n: int, long_run: bool = False, records: list[HeightRecord] | None = None) -> tuple[int, ...]:
    """``eta[i]`` = number of staircase tableaux ``Q`` with ``l_Q = i``, ``i = 0..C(n,3)``."""
    if records is None:
        records = height_records(n, long_run=long_run)
    eta = [0] * (comb(n, 3) + 1)
    for rec in records:
        eta[rec.height] += 1
    return tuple(eta)


def weak_descents(w: Word) -> set[int]:
    return {i for i in range(1, len(w)) if w[i - 1] >= w[i]}


def check_descents(q: Tableau) -> Report:
    rep = Report("weak descents of W_Q match Des(Q)")
    des = descent_set(q)
    for w in enumerate_WQ(q):
        rep.checked += 1
        if weak_descents(w) != des:
            rep.fail((w, sorted(weak_descents(w)), sorted(des)))
    return rep


def check_minimal(q: Tableau) -> Report:
    """The column word lies in ``W_Q`` and is its only minimal element."""
    rep = Report("column word is the unique minimal element")
    try:
        _staircase_n(q)
    except ValueError:
        rep.notes["exploratory"] = "non-staircase shape"
    poset = WordPoset(q, enumerate_WQ(q))
    rep.checked += 1
    bottom = column_word(q)
    minimal = poset.minimal_elements()
    if minimal != [bottom]:
        rep.fail((str(q), bottom, minimal))
    return rep


def check_conjecture_height(q: Tableau) -> Report:
    """
    Report, never assert, whether ``EG^-1(Q)`` is maximal and whether the
    interval height equals the right-slide count.
    """
    _staircase_n(q)
    rec = _height_record(q)
    rep = Report("height conjecture")
    rep.checked += 1
    rep.notes.update(height=rec.height, slide_sum=rec.slide_sum, maximal_count=rec.maximal_count)
    if not rec.top_is_maximal:
        rep.fail(("EG^-1(Q) not maximal", str(q)))
    if rec.height != rec.slide_sum:
        rep.fail(("height != right slides", str(q), rec.height, rec.slide_sum))
    rep.notes["status"] = "holds" if rep.ok else "counterexample"
    return rep


def check_consequences(n: int, records: list[HeightRecord] | None = None) -> Report:
    """
    Empirical checks, from true heights: ``l_{Q^t} = C(n,3) - l_Q``,
    ``l_Q = l_{Q^S}``, all ``eta`` even (n >= 4), and ``l_Q = C(n,3)`` exactly
    for anti-diagonally increasing ``Q``.
    """
    if records is None:
        records = height_records(n)
    height = {rec.q: rec.height for rec in records}
    top = comb(n, 3)
    rep = Report(f"height consequences n={n}")
    for q, h in height.items():
        rep.checked += 1
        if height[transpose(q)] != top - h:
            rep.fail(("transpose", str(q)))
        if height[evacuation(q)] != h:
            rep.fail(("evacuation", str(q)))
        if (h == top) != is_antidiagonal_increasing(q):
            rep.fail(("antidiagonal", str(q)))
        if (h == 0) != is_shifted_staircase(q):
            rep.fail(("shifted", str(q)))
    eta = eta_table(n, records=records)
    if eta != eta[::-1]:
        rep.fail(("eta not symmetric", eta))
    if n >= 4 and any(e % 2 for e in eta):
        rep.fail(("eta has odd entries", eta))
    rep.notes["eta"] = list(eta)
    return rep
