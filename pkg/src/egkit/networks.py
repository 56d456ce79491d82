"""
Sorting networks: reduced words of the reverse permutation.

Exhaustive enumeration walks up the weak order from the identity, so every
emitted word is reduced by construction.  Random networks come from a
uniform staircase tableau (hook walk) pushed through the inverse
Edelman--Greene map; since that map is a bijection the network is uniform
too.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, cos, factorial, floor, pi, sin, sqrt
from typing import Iterator

import numpy as np

from . import _kernels
from .insertion import eg_map
from .permutations import (
    Partition, Perm, Word, compose_word, complement_word, contains_pattern,
    inverse, longest,
)
from .tableaux import (
    Tableau, column_word, is_antidiagonal_increasing, is_lattice_word,
    is_shifted_staircase, staircase,
)

__all__ = [
    "SortingNetwork", "FrozenTrace", "NetworkProfile", "enumerate_reduced_words",
    "enumerate_all_reduced_words", "enumerate_networks",
    "enumerate_132_avoiding_networks", "count_132_formula",
    "characterize_network", "random_syt", "random_network",
    "random_networks", "frozen_evolution", "scaled_frozen_region",
    "boundary_cells", "boundary_points", "conjecture_boundary",
    "boundary_deviation", "wiring_diagram_svg", "overlay_svg",
]

DEFAULT_CAP = 7


@dataclass(frozen=True)
class SortingNetwork:
    word: Word
    n: int

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        if len(word) != comb(self.n, 2) or compose_word(word, self.n) != longest(self.n):
            raise ValueError(f"{word} is not a sorting network for n = {self.n}")


def enumerate_reduced_words(sigma: Perm) -> Iterator[Word]:
    """All reduced words of ``sigma`` in lexicographic order."""
    n = len(sigma)
    where = inverse(sigma)
    target = sum(1 for a in range(n) for b in range(a + 1, n) if sigma[a] > sigma[b])
    perm = list(range(1, n + 1))
    word: list[int] = []

    def dfs() -> Iterator[Word]:
        if len(word) == target:
            yield tuple(word)
            return
        for i in range(n - 1):
            a, b = perm[i], perm[i + 1]
            # swap only pairs that sigma itself inverts
            if a < b and where[b - 1] < where[a - 1]:
                perm[i], perm[i + 1] = b, a
                word.append(i + 1)
                yield from dfs()
                word.pop()
                perm[i], perm[i + 1] = a, b

    return dfs()


def enumerate_all_reduced_words(n: int) -> Iterator[tuple[Word, Perm]]:
    """Every reduced word in ``S_n`` with its permutation, prefixes before extensions."""
    perm = list(range(1, n + 1))
    word: list[int] = []

    def dfs() -> Iterator[tuple[Word, Perm]]:
        yield tuple(word), tuple(perm)
        for i in range(n - 1):
            a, b = perm[i], perm[i + 1]
            if a < b:
                perm[i], perm[i + 1] = b, a
                word.append(i + 1)
                yield from dfs()
                word.pop()
                perm[i], perm[i + 1] = a, b

    return dfs()


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise ValueError(f"n = {n} exceeds enumeration cap {cap}")


def enumerate_networks(n: int, cap: int = DEFAULT_CAP) -> Iterator[Word]:
    _check_cap(n, cap)
    return enumerate_reduced_words(longest(n))


_AVOID = {"132": (1, 3, 2), "213": (2, 1, 3), "312": (3, 1, 2), "231": (2, 3, 1)}


def enumerate_132_avoiding_networks(n: int, cap: int = DEFAULT_CAP, avoid: str = "132") -> Iterator[Word]:
    """Networks whose every intermediate permutation avoids ``avoid``."""
    _check_cap(n, cap)
    pattern = _AVOID[str(avoid)]
    total = comb(n, 2)
    perm = list(range(1, n + 1))
    word: list[int] = []

    def dfs() -> Iterator[Word]:
        if len(word) == total:
            yield tuple(word)
            return
        for i in range(n - 1):
            a, b = perm[i], perm[i + 1]
            if a < b:
                perm[i], perm[i + 1] = b, a
                if not contains_pattern(tuple(perm), pattern):
                    word.append(i + 1)
                    yield from dfs()
                    word.pop()
                perm[i], perm[i + 1] = a, b

    return dfs()


def count_132_formula(n: int) -> int:
    """``C(n,2)! * 1!2!...(n-2)! / (1!3!...(2n-3)!)``, exactly."""
    if n < 1:
        raise ValueError("n must be positive")
    num = factorial(comb(n, 2))
    for k in range(1, n - 1):
        num *= factorial(k)
    den = 1
    for k in range(1, n):
        den *= factorial(2 * k - 1)
    assert num % den == 0
    return num // den


@dataclass(frozen=True)
class NetworkProfile:
    """The equivalent descriptions of 132- and 213-avoiding networks."""

    word: Word
    avoids_132: bool
    avoids_312: bool
    shifted: bool
    lattice: bool
    is_column_word: bool
    avoids_213: bool
    avoids_231: bool
    antidiagonal: bool
    complement_lattice: bool
    complement_is_column_word: bool

    @property
    def consistent(self) -> bool:
        first = {self.avoids_132, self.avoids_312, self.shifted, self.lattice, self.is_column_word}
        second = {self.avoids_213, self.avoids_231, self.antidiagonal,
                  self.complement_lattice, self.complement_is_column_word}
        return len(first) == 1 and len(second) == 1


def _prefixes_avoid(w: Word, n: int, pattern) -> bool:
    perm = list(range(1, n + 1))
    for x in w:
        perm[x - 1], perm[x] = perm[x], perm[x - 1]
        if contains_pattern(tuple(perm), pattern):
            return False
    return True


def characterize_network(w: Word | SortingNetwork, n: int | None = None) -> NetworkProfile:
    if isinstance(w, SortingNetwork):
        w, n = w.word, w.n
    net = SortingNetwork(w, n)
    w, n = net.word, net.n
    sc = staircase(n)
    _, q = eg_map(w)
    wbar = complement_word(w, n)
    _, qbar = eg_map(wbar)
    return NetworkProfile(
        word=w,
        avoids_132=_prefixes_avoid(w, n, (1, 3, 2)),
        avoids_312=_prefixes_avoid(w, n, (3, 1, 2)),
        shifted=is_shifted_staircase(q),
        lattice=is_lattice_word(w, sc),
        is_column_word=w == column_word(q),
        avoids_213=_prefixes_avoid(w, n, (2, 1, 3)),
        avoids_231=_prefixes_avoid(w, n, (2, 3, 1)),
        antidiagonal=is_antidiagonal_increasing(q),
        complement_lattice=is_lattice_word(wbar, sc),
        complement_is_column_word=wbar == column_word(qbar),
    )


def _rng(seed) -> np.random.Generator:
    if seed is None:
        raise ValueError("a seed is required for random generation")
    return np.random.default_rng(seed)


def _array_to_tableau(q: np.ndarray, shape: Partition) -> Tableau:
    return Tableau(tuple(tuple(int(v) for v in q[i, :r]) for i, r in enumerate(shape)))


def random_syt(shape: Partition, seed=None, rng: np.random.Generator | None = None) -> Tableau:
    """Uniformly random standard tableau of ``shape``."""
    rng = rng if rng is not None else _rng(seed)
    q = _kernels.hook_walk(np.asarray(shape, dtype=np.int64), rng)
    return _array_to_tableau(q, shape)


def _network_from_rng(n: int, rng: np.random.Generator) -> np.ndarray:
    q = _kernels.hook_walk(np.asarray(staircase(n), dtype=np.int64), rng)
    first, _ = _kernels.promote_all(q)
    return first[::-1].copy()


def random_network(n: int, seed) -> SortingNetwork:
    """A uniformly random sorting network; the same seed gives the same network."""
    if n < 2:
        raise ValueError("n must be at least 2")
    word = _network_from_rng(n, _rng(seed))
    return SortingNetwork(tuple(int(x) for x in word), n)


def random_networks(n: int, count: int, seed) -> np.ndarray:
    """``count`` independent uniform networks as rows of an integer array."""
    if n < 2:
        raise ValueError("n must be at least 2")
    rng = _rng(seed)
    out = np.empty((count, comb(n, 2)), dtype=np.int64)
    for k in range(count):
        out[k] = _network_from_rng(n, rng)
    return out


@dataclass(frozen=True)
class FrozenTrace:
    """
    Growth of the frozen region along a word.

    Frozen cells never thaw, so the whole trace fits in one array:
    ``freeze[i, j]`` is the first step at which cell ``(i+1, j+1)`` is frozen
    (-1 if never).
    """

    n: int
    length: int
    freeze: np.ndarray

    def shape_at(self, step: int) -> Partition:
        frozen = (self.freeze >= 0) & (self.freeze <= step)
        rows = frozen.sum(axis=1)
        return tuple(int(r) for r in rows if r > 0)

    def shapes(self) -> list[Partition]:
        """Frozen shape after each prefix, steps ``1..length``."""
        return [self.shape_at(k) for k in range(1, self.length + 1)]


def frozen_evolution(w: Word | SortingNetwork, n: int | None = None) -> FrozenTrace:
    if isinstance(w, SortingNetwork):
        w, n = w.word, w.n
    if n is None:
        raise ValueError("n is required for a bare word")
    arr = np.asarray(w, dtype=np.int64)
    if arr.size and (arr.min() < 1 or arr.max() > n - 1):
        raise ValueError(f"letters must lie in 1..{n - 1}")
    freeze = _kernels.freeze_steps(arr, max(n, 1) + 1)
    return FrozenTrace(n, len(arr), freeze)


def _step_at(trace: FrozenTrace, t: float) -> int:
    if not 0 < t < 1:
        raise ValueError(f"t = {t} must lie strictly between 0 and 1")
    return floor(t * comb(trace.n, 2))


def _scale(cells: np.ndarray, n: int) -> np.ndarray:
    """Cells ``(i, j)`` to ``(2j/n - 1, 1 - 2i/n)``."""
    if cells.size == 0:
        return np.zeros((0, 2))
    return np.column_stack((2 * cells[:, 1] / n - 1, 1 - 2 * cells[:, 0] / n))


def _frozen_cells(trace: FrozenTrace, t: float) -> np.ndarray:
    step = _step_at(trace, t)
    frozen = (trace.freeze >= 0) & (trace.freeze <= step)
    return frozen, np.argwhere(frozen) + 1


def scaled_frozen_region(trace: FrozenTrace, t: float) -> np.ndarray:
    _, cells = _frozen_cells(trace, t)
    return _scale(cells, trace.n)


def boundary_cells(trace: FrozenTrace, t: float) -> np.ndarray:
    """Frozen cells whose east or south neighbour is not frozen."""
    frozen, _ = _frozen_cells(trace, t)
    east = np.zeros_like(frozen)
    east[:, :-1] = frozen[:, 1:]
    south = np.zeros_like(frozen)
    south[:-1, :] = frozen[1:, :]
    edge = frozen & ~(east & south)
    return np.argwhere(edge) + 1


def boundary_points(trace: FrozenTrace, t: float) -> np.ndarray:
    return _scale(boundary_cells(trace, t), trace.n)


def conjecture_boundary(t: float, num: int = 1000) -> np.ndarray:
    """
    ``num`` points along the predicted frozen boundary at time ``t``: the arc
    of ``sin^2(pi t) - 2xy cos(pi t) - x^2 - y^2 = 0`` with ``x <= -cos(pi t)``
    and ``y >= cos(pi t)``, running from ``(-cos(pi t), 1)`` to ``(-1, cos(pi t))``.
    """
    if not 0 < t < 1:
        raise ValueError(f"t = {t} must lie strictly between 0 and 1")
    c, s = cos(pi * t), sin(pi * t)
    # in u = (x+y)/sqrt2, v = (y-x)/sqrt2 the quadric is u^2(1+c) + v^2(1-c) = s^2
    a, b = s / sqrt(1 + c), s / sqrt(1 - c)

    def angle(x, y):
        u, v = (x + y) / sqrt(2), (y - x) / sqrt(2)
        return np.arctan2(v / b, u / a)

    theta = np.linspace(angle(-c, 1.0), angle(-1.0, c), num)
    u, v = a * np.cos(theta), b * np.sin(theta)
    return np.column_stack(((u - v) / sqrt(2), (u + v) / sqrt(2)))


def boundary_deviation(trace: FrozenTrace, t: float, num: int | None = None) -> float:
    """
    Largest distance from a boundary point of the scaled frozen region to the
    predicted arc (sampled at ``10 n`` points by default).  NaN when nothing
    is frozen yet.
    """
    pts = boundary_points(trace, t)
    if len(pts) == 0:
        return float("nan")
    arc = conjecture_boundary(t, num or 10 * trace.n)
    d2 = ((pts[:, None, :] - arc[None, :, :]) ** 2).sum(axis=2)
    return float(np.sqrt(d2.min(axis=1)).max())


def wiring_diagram_svg(w: Word, n: int, step: float = 40.0, gap: float = 30.0) -> str:
    """Wiring diagram: one polyline per wire, one crossing per letter."""
    w = tuple(w)
    if any(not 1 <= x <= n - 1 for x in w):
        raise ValueError(f"letters must lie in 1..{n - 1}")
    margin = 30.0
    width = 2 * margin + step * (len(w) + 1)
    height = 2 * margin + gap * (n - 1)
    at = list(range(1, n + 1))  # at[pos - 1] = wire occupying pos
    points = {v: [(margin, margin + gap * (v - 1))] for v in at}
    for k, x in enumerate(w, 1):
        xk = margin + step * k
        for pos, v in enumerate(at, 1):
            if pos not in (x, x + 1):
                continue
            points[v].append((xk - step / 2 + 6, margin + gap * (pos - 1)))
            dest = x + 1 if pos == x else x
            points[v].append((xk + step / 2 - 6, margin + gap * (dest - 1)))
        at[x - 1], at[x] = at[x], at[x - 1]
    for pos, v in enumerate(at, 1):
        points[v].append((width - margin, margin + gap * (pos - 1)))
    colors = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"]
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" height="{height:g}" '
        f'viewBox="0 0 {width:g} {height:g}">'
    ]
    for v in range(1, n + 1):
        pts = " ".join(f"{px:g},{py:g}" for px, py in points[v])
        out.append(
            f'<polyline data-wire="{v}" points="{pts}" fill="none" '
            f'stroke="{colors[(v - 1) % len(colors)]}" stroke-width="2"/>'
        )
        out.append(f'<text x="{margin - 18:g}" y="{margin + gap * (v - 1) + 4:g}" font-size="12">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def overlay_svg(points: np.ndarray, arc: np.ndarray, size: int = 400) -> str:
    """Frozen boundary points over the predicted arc, in ``[-1, 1]^2``."""

    def px(x, y):
        return (x + 1) / 2 * size, (1 - y) / 2 * size

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="white" stroke="black"/>',
    ]
    arc_pts = " ".join("{:.2f},{:.2f}".format(*px(x, y)) for x, y in arc)
    out.append(f'<polyline points="{arc_pts}" fill="none" stroke="#d62728" stroke-width="1.5"/>')
    for x, y in points:
        cx, cy = px(x, y)
        out.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="1.2" fill="#1f77b4"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

