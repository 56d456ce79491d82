"""
The desk-scale verification suite.

Each ``criterion_*`` function runs one acceptance check and returns a
:class:`~egkit.insertion.Report` whose ``notes`` carry the measured values
and the wall time.  ``run_all`` drives them in order; the ``verify`` CLI
command and ``tests/test_acceptance.py`` are thin wrappers around it.
"""

from __future__ import annotations

import time
from collections import Counter
from typing import Callable

import numpy as np

from .insertion import Report, eg_map, frozen_region, insert_rows
from .networks import (
    boundary_deviation, count_132_formula, enumerate_132_avoiding_networks,
    enumerate_all_reduced_words, enumerate_networks, frozen_evolution,
    random_network, random_networks,
)
from .permutations import (
    all_perms, complement_word, is_vexillary, rank, reverse_word,
    rothe_diagram, top_left_component,
)
from .posets import alphabet_bound, check_consequences, enumerate_WQ, eta_table, height_records
from .promotion import eg_inverse, evacuation
from .tableaux import Tableau, count_syt, enumerate_syt, staircase, transpose
from .vexillary import delta_map, delta_shifts, t_construction

__all__ = ["CRITERIA", "run_all"] + [f"criterion_{k}" for k in range(1, 12)]

ETA_REFERENCE = {
    3: (1, 1),
    4: (2, 2, 8, 2, 2),
    5: (12, 14, 38, 108, 142, 140, 142, 108, 38, 14, 12),
}
BOUNDARY_TOLERANCE = 0.08
BOUNDARY_TIMES = (0.25, 0.5, 0.75)
CHI_SQUARE_SEED = 20180701
CHI_SQUARE_SAMPLES = 100_000


def _timed(rep: Report, start: float, budget: float) -> Report:
    elapsed = time.perf_counter() - start
    rep.notes["seconds"] = round(elapsed, 4)
    rep.notes["budget_seconds"] = budget
    if elapsed > budget:
        rep.fail(("runtime", elapsed, budget))
    return rep


def criterion_1() -> Report:
    """The worked example: insertion, inverse, evacuation of 321232."""
    rep = Report("1 worked example 321232")
    p_exp = Tableau.of((1, 2, 3), (2, 3), (3,))
    q_exp = Tableau.of((1, 4, 5), (2, 6), (3,))
    s_exp = Tableau.of((1, 2, 6), (3, 5), (4,))
    w = (3, 2, 1, 2, 3, 2)
    best = float("inf")
    for _ in range(5):
        start = time.perf_counter()
        p, q = eg_map(w)
        inv = eg_inverse(q)
        ev = evacuation(q)
        best = min(best, time.perf_counter() - start)
    rep.checked = 3
    for label, got, exp in (("P", p, p_exp), ("Q", q, q_exp), ("Q^S", ev, s_exp)):
        if got != exp:
            rep.fail((label, str(got), str(exp)))
    if inv != w:
        rep.fail(("EG^-1", inv))
    rep.notes["seconds"] = best
    rep.notes["budget_seconds"] = 0.001
    if best > 0.001:
        rep.fail(("runtime", best))
    return rep


def criterion_2() -> Report:
    """|R(n)| = f^{sc_n} for n = 3, 4, 5 and EG is a bijection on R(5)."""
    start = time.perf_counter()
    rep = Report("2 bijection counts and round trips")
    counts = {}
    for n, expected in ((3, 2), (4, 16), (5, 768)):
        count = sum(1 for _ in enumerate_networks(n))
        counts[n] = count
        rep.checked += 1
        if not count == count_syt(staircase(n)) == expected:
            rep.fail(("count", n, count))
    images = set()
    for w in enumerate_networks(5):
        _, q = eg_map(w)
        images.add(q)
        rep.checked += 1
        if eg_inverse(q) != w:
            rep.fail(("EG^-1(EG(w)) != w", w))
    for q in enumerate_syt(staircase(5)):
        rep.checked += 1
        if eg_map(eg_inverse(q))[1] != q:
            rep.fail(("EG(EG^-1(Q)) != Q", str(q)))
    if len(images) != 768:
        rep.fail(("EG not injective on R(5)", len(images)))
    rep.notes["counts"] = counts
    return _timed(rep, start, 10)


_RECORDS: dict[int, list] = {}


def _records(n: int):
    if n not in _RECORDS:
        _RECORDS[n] = height_records(n)
    return _RECORDS[n]


def criterion_3() -> Report:
    """Height distribution eta_{n,i} for n = 3, 4, 5 against the reference values."""
    start = time.perf_counter()
    rep = Report("3 height distribution eta, n <= 5")
    for n, expected in ETA_REFERENCE.items():
        eta = eta_table(n, records=_records(n))
        rep.notes[f"eta_{n}"] = list(eta)
        rep.checked += 1
        if eta != expected:
            rep.fail((n, eta, expected))
    return _timed(rep, start, 600)


def criterion_4() -> Report:
    """132-avoiding network counts against the closed formula and eta_{n,0}."""
    start = time.perf_counter()
    rep = Report("4 closed formula for 132-avoiding networks")
    expected = {3: 1, 4: 2, 5: 12, 6: 286}
    found = {}
    for n, exp in expected.items():
        count = sum(1 for _ in enumerate_132_avoiding_networks(n))
        found[n] = count
        rep.checked += 1
        if not count == count_132_formula(n) == exp:
            rep.fail(("count", n, count, count_132_formula(n)))
    for n in (3, 4, 5):
        rep.checked += 1
        eta0 = eta_table(n, records=_records(n))[0]
        if eta0 != count_132_formula(n):
            rep.fail(("eta_{n,0}", n, eta0))
    rep.notes["counts"] = found
    return _timed(rep, start, 60)


def _reduced_word_walk(n: int, visit: Callable) -> None:
    """Depth-first over every reduced word of S_n, carrying its insertion tableau."""
    perm = list(range(1, n + 1))
    word: list[int] = []

    def dfs(rows: list[list[int]]) -> None:
        visit(tuple(word), tuple(perm), rows)
        for i in range(n - 1):
            a, b = perm[i], perm[i + 1]
            if a < b:
                perm[i], perm[i + 1] = b, a
                word.append(i + 1)
                child = [r[:] for r in rows]
                insert_rows(child, i + 1)
                dfs(child)
                word.pop()
                perm[i], perm[i + 1] = a, b

    dfs([])


def criterion_5() -> Report:
    """Frozen region = top-left diagram component for every reduced word in S_5."""
    start = time.perf_counter()
    rep = Report("5 frozen region vs diagram, all reduced words of S_5")
    lam_cache: dict = {}

    def visit(word, perm, rows):
        if perm not in lam_cache:
            lam_cache[perm] = top_left_component(rothe_diagram(perm))
        lam_f = frozen_region(Tableau(tuple(map(tuple, rows))))
        rep.checked += 1
        if lam_cache[perm] != lam_f:
            rep.fail((word, lam_cache[perm], lam_f))

    _reduced_word_walk(5, visit)
    rep.notes["permutations"] = len(lam_cache)
    return _timed(rep, start, 60)


def criterion_6() -> Report:
    """
    Reverse and complement symmetries.

    ``P(w^rev) = P(w)^t`` is checked on every reduced word of S_4 and on R(5).
    ``Q(w^rev) = Q(w)^S`` is a statement about sorting networks: for a general
    reduced word the two sides have transposed shapes (``w = 12`` already
    fails), so it is checked on R(4) and R(5), and the number of S_4 words
    that happen to satisfy it is recorded in the notes.
    """
    start = time.perf_counter()
    rep = Report("6 reverse/complement symmetries")
    general = [w for w, _ in enumerate_all_reduced_words(4)]
    networks = list(enumerate_networks(4)) + list(enumerate_networks(5))
    literal = 0
    for w in general + list(enumerate_networks(5)):
        p, q = eg_map(w)
        pr, qr = eg_map(reverse_word(w))
        rep.checked += 1
        if pr != transpose(p):
            rep.fail(("P(w^rev) != P(w)^t", w))
    for w in general:
        p, q = eg_map(w)
        literal += eg_map(reverse_word(w))[1] == evacuation(q)
    for w in networks:
        q = eg_map(w)[1]
        rep.checked += 1
        if eg_map(reverse_word(w))[1] != evacuation(q):
            rep.fail(("Q(w^rev) != Q(w)^S", w))
    for w in enumerate_networks(5):
        rep.checked += 1
        if eg_map(complement_word(w, 5))[1] != transpose(eg_map(w)[1]):
            rep.fail(("Q(w-bar) != Q(w)^t", w))
    rep.notes["q_reverse_identity_on_all_S4_words"] = f"{literal}/{len(general)}"
    return _timed(rep, start, 30)


def _vex_static_check(sigma, t: Tableau, rep: Report) -> None:
    if delta_map(t) != rothe_diagram(sigma):
        rep.fail(("delta(T) != D", sigma))
        return
    for (i, j), k in delta_shifts(t).items():
        if rank(sigma, i + k, j + k) != k:
            rep.fail(("shift != rank", sigma, (i, j)))


def criterion_7() -> Report:
    """Vexillary correspondence for all vexillary permutations of S_6."""
    start = time.perf_counter()
    rep = Report("7 vexillary diagram correspondence, S_6")
    fig = (8, 1, 3, 9, 7, 5, 2, 4, 6)
    fig_t = Tableau.of(
        (1, 3, 4, 5, 6), (2, 5, 6, 7), (3, 6, 7), (4, 7, 8), (5, 8), (6,), (7,)
    )
    t = t_construction(fig)
    rep.checked += 1
    if t != fig_t:
        rep.fail(("T(813975246)", str(t)))
    _vex_static_check(fig, t, rep)

    for n in (5, 6):
        targets = {s: t_construction(s) for s in all_perms(n) if is_vexillary(s)}
        for s, t in targets.items():
            rep.checked += 1
            _vex_static_check(s, t, rep)
        seen: dict = {}

        def visit(word, perm, rows):
            target = targets.get(perm)
            if target is None:
                return
            rep.checked += 1
            if tuple(map(tuple, rows)) != target.rows:
                rep.fail(("P(w) != T(sigma)", word))
            seen[perm] = seen.get(perm, 0) + 1

        _reduced_word_walk(n, visit)
        rep.notes[f"vexillary_S{n}"] = len(targets)
        rep.notes[f"words_S{n}"] = sum(seen.values())
    return _timed(rep, start, 120)


def criterion_8() -> Report:
    """Descents, minimal element, height conjecture and its consequences."""
    start = time.perf_counter()
    rep = Report("8 word-poset propositions")
    counterexamples = 0
    for n in (3, 4, 5):
        for rec in _records(n):
            rep.checked += 1
            if not rec.descents_ok:
                rep.fail(("descents", str(rec.q)))
            if not rec.bottom_ok:
                rep.fail(("minimal", str(rec.q)))
            if rec.reduced_count != 1:
                rep.fail(("reduced elements", str(rec.q), rec.reduced_count))
            if not rec.top_is_maximal or rec.height != rec.slide_sum:
                counterexamples += 1
                rep.fail(("height conjecture", str(rec.q)))
    rep.notes["conjecture_counterexamples"] = counterexamples
    for n in (4, 5):
        cons = check_consequences(n, records=_records(n))
        rep.merge(cons)
    return _timed(rep, start, 600)


def boundary_means(n: int, seeds: int = 50, times=BOUNDARY_TIMES) -> dict[float, float]:
    """Mean boundary deviation over ``seeds`` random networks of size ``n``."""
    devs: dict[float, list[float]] = {t: [] for t in times}
    for seed in range(seeds):
        trace = frozen_evolution(random_network(n, seed))
        for t in times:
            devs[t].append(boundary_deviation(trace, t))
    return {t: float(np.mean(v)) for t, v in devs.items()}


def criterion_9(seeds: int = 50) -> Report:
    """Frozen boundary against the predicted arc at n = 200 and n = 400."""
    start = time.perf_counter()
    rep = Report("9 frozen boundary vs predicted arc")
    small = boundary_means(200, seeds)
    large = boundary_means(400, seeds)
    rep.notes["mean_deviation_n200"] = {str(t): round(v, 4) for t, v in small.items()}
    rep.notes["mean_deviation_n400"] = {str(t): round(v, 4) for t, v in large.items()}
    for t in BOUNDARY_TIMES:
        rep.checked += 2
        if not small[t] <= BOUNDARY_TOLERANCE:
            rep.fail(("n=200 mean deviation above tolerance", t, small[t]))
        if not large[t] <= small[t]:
            rep.fail(("deviation grew from n=200 to n=400", t, small[t], large[t]))
    return _timed(rep, start, 300)


def criterion_10() -> Report:
    """Chi-square test of uniform sampling over the 16 networks of R(4)."""
    from scipy.stats import chisquare

    start = time.perf_counter()
    rep = Report("10 uniform sampling, n=4")
    samples = random_networks(4, CHI_SQUARE_SAMPLES, CHI_SQUARE_SEED)
    counts = Counter(map(tuple, samples.tolist()))
    networks = list(enumerate_networks(4))
    observed = [counts.get(w, 0) for w in networks]
    rep.checked = len(networks)
    if sum(observed) != CHI_SQUARE_SAMPLES:
        rep.fail(("sample outside R(4)", sum(observed)))
    res = chisquare(observed)
    rep.notes.update(seed=CHI_SQUARE_SEED, statistic=float(res.statistic), pvalue=float(res.pvalue))
    if not res.pvalue > 0.001:
        rep.fail(("chi-square", res.pvalue))
    return _timed(rep, start, 5)


def _all_partitions(m: int):
    def rec(rem, bound):
        if rem == 0:
            yield ()
            return
        for part in range(min(rem, bound), 0, -1):
            for rest in rec(rem - part, part):
                yield (part,) + rest

    return rec(m, m)


def criterion_11() -> Report:
    """Alphabet bound B versus B + 1 for every standard tableau with at most 7 cells."""
    start = time.perf_counter()
    rep = Report("11 alphabet bound soundness, |Q| <= 7")
    for m in range(1, 8):
        for shape in _all_partitions(m):
            b = alphabet_bound(shape)
            for q in enumerate_syt(shape):
                rep.checked += 1
                if enumerate_WQ(q, bound=b) != enumerate_WQ(q, bound=b + 1):
                    rep.fail(str(q))
    return _timed(rep, start, 120)


CRITERIA = {k: globals()[f"criterion_{k}"] for k in range(1, 12)}


def run_all(only=None, echo: Callable[[str], None] | None = None) -> list[Report]:
    reports = []
    for k, fn in CRITERIA.items():
        if only and k not in only:
            continue
        rep = fn()
        reports.append(rep)
        if echo:
            echo(str(rep))
    return reports

