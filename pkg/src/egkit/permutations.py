"""
Permutations and words over adjacent transpositions.

Permutations are tuples in one-line notation with values ``1..n``; words are
tuples of positive letters, letter ``i`` standing for the transposition
``s_i`` that swaps positions ``i`` and ``i + 1``.  Products are composed from
the left, with transpositions acting on positions:

>>> compose_word((1, 2, 1, 3), 4)
(3, 2, 4, 1)

Cells are ``(row, col)`` pairs, 1-indexed.  The permutation matrix of ``p``
has its 1s at ``(p[i], i)``, which is the transpose of the more common
convention.
"""

from __future__ import annotations

import itertools
import json
import re
from collections.abc import Iterable, Iterator

Word = tuple[int, ...]
Perm = tuple[int, ...]
Cell = tuple[int, int]
Partition = tuple[int, ...]
CellSet = frozenset  # frozenset[Cell]

__all__ = [
    "Word", "Perm", "Cell", "Partition", "CellSet", "InvalidLetterError",
    "parse_word", "parse_perm", "format_word", "check_perm", "identity",
    "longest", "inverse", "all_perms", "compose_word", "inversions",
    "inv_count", "is_reduced", "weak_bruhat_leq", "rothe_diagram",
    "top_left_component", "perm_from_diagram", "lehmer_code", "rank",
    "contains_pattern", "avoids_132", "avoids_213", "avoids_312",
    "is_vexillary", "reverse_word", "complement_word", "cells_to_json",
    "cells_from_json",
]


class InvalidLetterError(ValueError):
    """A word letter is outside ``1..n-1``."""


_SEP = re.compile(r"[\s,]+")


def parse_word(text: str) -> Word:
    """
    Parse a word from text.

    Letters are separated by whitespace or commas.  A separator-free token
    such as ``"321232"`` is read digit by digit.

    >>> parse_word("3 2 1 2 3 2") == parse_word("321232") == (3, 2, 1, 2, 3, 2)
    True
    >>> parse_word("10,2")
    (10, 2)
    """
    tokens = [tok for tok in _SEP.split(text.strip()) if tok]
    if len(tokens) == 1 and len(tokens[0]) > 1:
        tokens = list(tokens[0])
    try:
        letters = tuple(int(tok) for tok in tokens)
    except ValueError:
        raise ValueError(f"malformed word: {text!r}") from None
    if any(x < 1 for x in letters):
        raise InvalidLetterError(f"letters must be positive: {text!r}")
    return letters


def parse_perm(text: str) -> Perm:
    """Parse one-line notation; digit strings like ``"3241"`` work for n <= 9."""
    tokens = [tok for tok in _SEP.split(text.strip()) if tok]
    if len(tokens) == 1 and len(tokens[0]) > 1:
        tokens = list(tokens[0])
    try:
        p = tuple(int(tok) for tok in tokens)
    except ValueError:
        raise ValueError(f"malformed permutation: {text!r}") from None
    check_perm(p)
    return p


def format_word(w: Iterable[int]) -> str:
    w = tuple(w)
    if all(x <= 9 for x in w):
        return "".join(map(str, w))
    return " ".join(map(str, w))


def check_perm(p: Perm) -> None:
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p}")


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest(n: int) -> Perm:
    """The reverse permutation ``n ... 2 1``."""
    return tuple(range(n, 0, -1))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p, 1):
        inv[v - 1] = i
    return tuple(inv)


def all_perms(n: int) -> Iterator[Perm]:
    return itertools.permutations(range(1, n + 1))


def compose_word(w: Iterable[int], n: int) -> Perm:
    """Return ``s_{w_1} ... s_{w_m}`` by swapping positions left to right."""
    p = list(range(1, n + 1))
    for x in w:
        if not 1 <= x <= n - 1:
            raise InvalidLetterError(f"letter {x} not in 1..{n - 1}")
        p[x - 1], p[x] = p[x], p[x - 1]
    return tuple(p)


def inversions(p: Perm) -> set[tuple[int, int]]:
    n = len(p)
    return {(i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if p[i] > p[j]}


def inv_count(p: Perm) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def is_reduced(w: Word, n: int) -> bool:
    return len(w) == inv_count(compose_word(w, n))


def weak_bruhat_leq(s: Perm, t: Perm) -> bool:
    """``s <= t`` iff the inversion set of ``s`` is contained in that of ``t``."""
    if len(s) != len(t):
        raise ValueError("permutations of different sizes")
    return inversions(s) <= inversions(t)


def rothe_diagram(p: Perm) -> CellSet:
    """
    The cells ``(i, j)`` with ``p[j] > i`` and ``p^-1[i] > j``.

    >>> sorted(rothe_diagram((2, 1, 3)))
    [(1, 1)]
    """
    n = len(p)
    pinv = inverse(p)
    return frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if p[j - 1] > i and pinv[i - 1] > j
    )


def top_left_component(cells: Iterable[Cell]) -> Partition:
    """
    Row lengths of the 4-connected component of ``cells`` containing ``(1, 1)``.

    Raises ``AssertionError`` if that component is not a Young diagram, which
    never happens for Rothe diagrams.
    """
    cells = set(cells)
    if (1, 1) not in cells:
        return ()
    seen = {(1, 1)}
    stack = [(1, 1)]
    while stack:
        i, j = stack.pop()
        for nb in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    rows: dict[int, int] = {}
    for i, _ in seen:
        rows[i] = rows.get(i, 0) + 1
    shape = tuple(rows[i] for i in range(1, len(rows) + 1))
    assert all(a >= b for a, b in zip(shape, shape[1:])), shape
    assert seen == {(i, j) for i, r in enumerate(shape, 1) for j in range(1, r + 1)}
    return shape


def lehmer_code(p: Perm) -> tuple[int, ...]:
    """``r_x = #{y > x : p[y] < p[x]}`` for each position ``x``."""
    n = len(p)
    return tuple(sum(1 for y in range(x + 1, n) if p[y] < p[x]) for x in range(n))


def perm_from_diagram(cells: Iterable[Cell]) -> Perm | None:
    """
    Return the permutation whose Rothe diagram is ``cells``, or ``None``.

    Column ``j`` of a diagram holds ``lehmer_code(p)[j]`` cells, which pins
    ``p`` down; the candidate is then checked cell by cell.
    """
    cells = frozenset(cells)
    if not cells:
        return ()
    ncols = max(j for _, j in cells)
    code = [0] * ncols
    for _, j in cells:
        code[j - 1] += 1
    # r_x <= n - x, and the last row of a diagram lies above the last 1
    size = max(max(i for i, _ in cells) + 1, max(x + r for x, r in enumerate(code, 1)))
    code += [0] * (size - ncols)
    avail = list(range(1, size + 1))
    p = []
    for r in code:
        if r >= len(avail):
            return None
        p.append(avail.pop(r))
    p = tuple(p)
    return p if rothe_diagram(p) == cells else None


def rank(p: Perm, i: int, j: int) -> int:
    """Number of 1s of the permutation matrix weakly north-west of ``(i, j)``."""
    n = len(p)
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"cell ({i}, {j}) outside the {n}x{n} grid")
    return sum(1 for x in range(j) if p[x] <= i)


def _pattern_of(values: tuple[int, ...]) -> tuple[int, ...]:
    order = sorted(range(len(values)), key=values.__getitem__)
    pat = [0] * len(values)
    for r, idx in enumerate(order, 1):
        pat[idx] = r
    return tuple(pat)


def contains_pattern(p: Perm, pattern: Iterable[int]) -> bool:
    """True iff some subsequence of ``p`` is order-isomorphic to ``pattern``."""
    pattern = tuple(pattern)
    k = len(pattern)
    if k == 0:
        return True
    pattern = _pattern_of(pattern)
    n = len(p)

    # backtrack over index choices, checking relative order incrementally
    chosen: list[int] = []

    def extend(start: int) -> bool:
        depth = len(chosen)
        if depth == k:
            return True
        for idx in range(start, n - (k - depth) + 1):
            v = p[idx]
            if all((p[c] < v) == (pattern[d] < pattern[depth]) for d, c in enumerate(chosen)):
                chosen.append(idx)
                if extend(idx + 1):
                    return True
                chosen.pop()
        return False

    return extend(0)


def avoids_132(p: Perm) -> bool:
    return not contains_pattern(p, (1, 3, 2))


def avoids_213(p: Perm) -> bool:
    return not contains_pattern(p, (2, 1, 3))


def avoids_312(p: Perm) -> bool:
    return not contains_pattern(p, (3, 1, 2))


def is_vexillary(p: Perm) -> bool:
    return not contains_pattern(p, (2, 1, 4, 3))


def reverse_word(w: Word) -> Word:
    return tuple(reversed(w))


def complement_word(w: Word, n: int) -> Word:
    """Replace each letter ``x`` by ``n - x``."""
    if any(not 1 <= x <= n - 1 for x in w):
        raise InvalidLetterError(f"letters of {w} must lie in 1..{n - 1}")
    return tuple(n - x for x in w)


def cells_to_json(cells: Iterable[Cell]) -> str:
    return json.dumps([list(c) for c in sorted(cells)])


def cells_from_json(text: str) -> CellSet:
    data = json.loads(text)
    cells = [tuple(int(v) for v in c) for c in data]
    if any(len(c) != 2 for c in cells) or len(set(cells)) != len(cells):
        raise ValueError("cell set must be distinct [row, col] pairs")
    return frozenset(cells)
