"""
Young tableaux in English notation.

A :class:`Tableau` is just its rows.  The same class carries both flavours
used here: standard tableaux (recording tableaux, entries ``1..m`` once each)
and increasing tableaux (insertion tableaux, strict rows and columns with
repeats allowed).  Use :meth:`Tableau.is_standard` and
:meth:`Tableau.is_increasing` to tell them apart.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import factorial
from typing import Iterator

from .permutations import Partition, Word

__all__ = [
    "Tableau", "staircase", "check_partition", "sub_partitions",
    "reading_word", "column_word", "transpose", "descent_set",
    "is_shifted_staircase", "is_antidiagonal_increasing", "is_lattice_word",
    "enumerate_syt", "count_syt", "hook_lengths",
]


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        if any(len(r) == 0 for r in rows):
            raise ValueError("empty row in tableau")
        if any(v < 1 for r in rows for v in r):
            raise ValueError("tableau entries must be positive")
        check_partition(tuple(len(r) for r in rows))
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, *rows) -> Tableau:
        """``Tableau.of((1, 2, 3), (2, 3), (3,))``"""
        return cls(tuple(rows))

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def __len__(self) -> int:
        return self.size

    def __getitem__(self, cell: tuple[int, int]) -> int:
        i, j = cell
        return self.rows[i - 1][j - 1]

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, r in enumerate(self.rows, 1):
            for j in range(1, len(r) + 1):
                yield i, j

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        for i, r in enumerate(self.rows, 1):
            for j, v in enumerate(r, 1):
                yield (i, j), v

    def entries(self) -> tuple[int, ...]:
        """Row-major entry sequence."""
        return tuple(v for r in self.rows for v in r)

    def position(self, value: int) -> tuple[int, int]:
        for cell, v in self.items():
            if v == value:
                return cell
        raise KeyError(value)

    def is_increasing(self) -> bool:
        rows = self.rows
        for i, r in enumerate(rows):
            if any(a >= b for a, b in zip(r, r[1:])):
                return False
            if i and any(rows[i - 1][j] >= r[j] for j in range(len(r))):
                return False
        return True

    def is_standard(self) -> bool:
        return sorted(self.entries()) == list(range(1, self.size + 1)) and self.is_increasing()

    def to_dict(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> Tableau:
        t = cls(tuple(tuple(r) for r in data["rows"]))
        if "shape" in data and tuple(data["shape"]) != t.shape:
            raise ValueError(f"shape {data['shape']} does not match rows {t.shape}")
        return t

    @classmethod
    def from_json(cls, text: str) -> Tableau:
        return cls.from_dict(json.loads(text))

    def pretty(self) -> str:
        if not self.rows:
            return "(empty)"
        width = max(len(str(v)) for v in self.entries())
        return "\n".join(" ".join(str(v).rjust(width) for v in r) for r in self.rows)

    def __str__(self) -> str:
        return "/".join(",".join(map(str, r)) for r in self.rows) or "()"


def check_partition(shape: Partition) -> None:
    if any(p <= 0 for p in shape) or any(a < b for a, b in zip(shape, shape[1:])):
        raise ValueError(f"not a partition: {shape}")


def staircase(n: int) -> Partition:
    """``sc_n = (n - 1, n - 2, ..., 1)``."""
    return tuple(range(n - 1, 0, -1))


def sub_partitions(shape: Partition) -> Iterator[Partition]:
    """All partitions contained in ``shape``, the empty one included."""

    def rec(i: int, bound: int) -> Iterator[Partition]:
        if i == len(shape):
            yield ()
            return
        yield ()
        for part in range(1, min(bound, shape[i]) + 1):
            for rest in rec(i + 1, part):
                yield (part,) + rest

    return rec(0, shape[0] if shape else 0)


def reading_word(t: Tableau) -> Word:
    """Rows read left to right, from the bottom row up."""
    return tuple(v for r in reversed(t.rows) for v in r)


def column_word(q: Tableau) -> Word:
    """The word whose ``k``-th letter is the column of ``k`` in ``q``."""
    if not q.is_standard():
        raise ValueError("column word needs a standard tableau")
    cols = [0] * q.size
    for (_, j), v in q.items():
        cols[v - 1] = j
    return tuple(cols)


def transpose(t: Tableau) -> Tableau:
    if not t.rows:
        return t
    return Tableau(tuple(
        tuple(r[j] for r in t.rows if len(r) > j) for j in range(len(t.rows[0]))
    ))


def descent_set(q: Tableau) -> set[int]:
    """Entries ``k`` with ``k + 1`` in a strictly lower row."""
    if not q.is_standard():
        raise ValueError("descents need a standard tableau")
    row = {v: i for (i, _), v in q.items()}
    return {k for k in range(1, q.size) if row[k + 1] > row[k]}


def _staircase_pairs(q: Tableau) -> Iterator[tuple[int, int]]:
    """Yield ``(Q[i, j], Q[i-1, j+1])`` for every anti-diagonal neighbour pair."""
    n = len(q.shape) + 1
    if q.shape != staircase(n):
        raise ValueError(f"shape {q.shape} is not a staircase")
    for i in range(2, len(q.rows) + 1):
        for j in range(1, len(q.rows[i - 1]) + 1):
            yield q[i, j], q[i - 1, j + 1]


def is_shifted_staircase(q: Tableau) -> bool:
    return all(low > up for low, up in _staircase_pairs(q))


def is_antidiagonal_increasing(q: Tableau) -> bool:
    return all(low < up for low, up in _staircase_pairs(q))


def is_lattice_word(w: Word, shape: Partition) -> bool:
    """Every prefix has at least as many ``i`` as ``i + 1``; letter ``i`` occurs ``shape[i-1]`` times."""
    counts = [0] * (max(len(shape), max(w, default=0)) + 2)
    for x in w:
        if x > 1 and counts[x - 1] <= counts[x]:
            return False
        counts[x] += 1
    return all(counts[i + 1] == (shape[i] if i < len(shape) else 0) for i in range(len(counts) - 1))


def hook_lengths(shape: Partition) -> list[list[int]]:
    conj = [sum(1 for r in shape if r > j) for j in range(shape[0])] if shape else []
    return [[(r - j - 1) + (conj[j] - i - 1) + 1 for j in range(r)] for i, r in enumerate(shape)]


def count_syt(shape: Partition) -> int:
    """Number of standard tableaux of ``shape`` by the hook-length formula."""
    check_partition(shape)
    prod = 1
    for row in hook_lengths(shape):
        for h in row:
            prod *= h
    return factorial(sum(shape)) // prod


def enumerate_syt(shape: Partition, cap: int = 12) -> list[Tableau]:
    """
    All standard tableaux of ``shape``, sorted lexicographically by their
    row-major entries.
    """
    check_partition(shape)
    m = sum(shape)
    if m > cap:
        raise ValueError(f"|shape| = {m} exceeds enumeration cap {cap}")
    rows: list[list[int]] = [[] for _ in shape]
    out: list[tuple[int, ...]] = []

    def place(k: int) -> None:
        if k > m:
            out.append(tuple(v for r in rows for v in r))
            return
        for i, r in enumerate(rows):
            if len(r) < shape[i] and (i == 0 or len(rows[i - 1]) > len(r)):
                r.append(k)
                place(k + 1)
                r.pop()

    place(1)
    out.sort()
    result = []
    for flat in out:
        it = iter(flat)
        result.append(Tableau(tuple(tuple(next(it) for _ in range(r)) for r in shape)))
    return result
