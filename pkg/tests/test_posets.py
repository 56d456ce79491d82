from itertools import product
from math import comb

import pytest

import oracles
from egkit.insertion import eg_map
from egkit.networks import enumerate_networks
from egkit.posets import (
    alphabet_bound, build_poset, check_conjecture_height, check_consequences,
    check_descents, check_minimal, enumerate_WQ, eta_table, height_records,
    interval_height, weak_descents,
)
from egkit.promotion import eg_inverse, right_slide_total
from egkit.tableaux import Tableau, column_word, count_syt, enumerate_syt, staircase

T = Tableau.of
Q_EXAMPLE = T((1, 4, 5), (2, 6), (3,))


def wq_bruteforce(q, bound):
    """Every word over 1..bound whose insertion is frozen and records q."""
    out = []
    for w in product(range(1, bound + 1), repeat=q.size):
        p, rec = oracles.eg(w)
        if rec == q.rows and oracles.is_frozen(p):
            out.append(w)
    return out


@pytest.mark.parametrize("q, expected", [
    (T((1,), (2,), (3,)), [(1, 1, 1), (2, 1, 1), (2, 2, 1), (3, 1, 1), (3, 2, 1)]),
    (T((1, 2), (3,)), [(1, 2, 1)]),
    (T((1, 3), (2,)), [(1, 1, 2), (2, 1, 2)]),
    (T((1,)), [(1,)]),
])
def test_small_word_sets(q, expected):
    assert enumerate_WQ(q) == expected


@pytest.mark.parametrize("q", [
    T((1, 3), (2, 4)), T((1, 2, 4), (3,)), T((1, 3, 4), (2,)),
    T((1, 2), (3,), (4,)), T((1, 3, 4), (2, 5)), T((1, 4), (2, 5), (3,)),
])
def test_word_sets_against_bruteforce(q):
    b = alphabet_bound(q.shape)
    assert enumerate_WQ(q) == wq_bruteforce(q, b + 1)
    # letters beyond the frozen bound never help
    assert enumerate_WQ(q, bound=b + 2) == enumerate_WQ(q)


def test_alphabet_bound():
    assert alphabet_bound((3, 2, 1)) == 3
    assert alphabet_bound((1, 1, 1)) == 3
    assert alphabet_bound(()) == 0


def test_cap_and_standardness():
    with pytest.raises(ValueError):
        enumerate_WQ(T((1, 2, 3, 4, 5), (6, 7, 8, 9), (10, 11, 12), (13, 14), (15,)))
    with pytest.raises(ValueError):
        enumerate_WQ(T((1, 2, 3), (2, 3), (3,)))


def test_worked_example_poset():
    poset = build_poset(Q_EXAMPLE)
    bottom, top = column_word(Q_EXAMPLE), eg_inverse(Q_EXAMPLE)
    assert bottom == (1, 1, 1, 2, 3, 2) and top == (3, 2, 1, 2, 3, 2)
    assert poset.minimal_elements() == [bottom]
    assert top in poset.maximal_elements()
    assert poset.reduced_elements() == [top]
    assert interval_height(poset, bottom, top) == 3 == right_slide_total(Q_EXAMPLE)


def test_shifted_tableau_collapses_to_one_point():
    q = T((1, 2, 4), (3, 5), (6,))
    poset = build_poset(q)
    assert poset.elements == [column_word(q)] == [eg_inverse(q)]
    assert interval_height(poset, column_word(q), column_word(q)) == 0


@pytest.mark.parametrize("q", list(enumerate_syt(staircase(4)))[::3])
def test_covers_and_heights_against_oracle(q):
    poset = build_poset(q)
    elems = poset.elements
    less = {(v, w) for v in elems for w in elems if v != w and poset.leq(v, w)}
    covers = {(v, w) for v, w in less if not any((v, u) in less and (u, w) in less for u in elems)}
    assert poset.covers == covers
    bottom, top = column_word(q), eg_inverse(q)
    inside = [w for w in elems if poset.leq(bottom, w) and poset.leq(w, top)]
    assert interval_height(poset, bottom, top) == oracles.longest_chain(inside)


def test_interval_endpoints_are_checked():
    poset = build_poset(Q_EXAMPLE)
    with pytest.raises(ValueError):
        interval_height(poset, (1, 1, 1, 1, 1, 1), (3, 2, 1, 2, 3, 2))
    with pytest.raises(ValueError):
        interval_height(poset, (3, 2, 1, 2, 3, 2), (1, 1, 1, 2, 3, 2))


def test_dot_output():
    dot = build_poset(T((1, 3), (2,))).to_dot()
    assert dot.startswith("digraph") and '"112" -> "212";' in dot


@pytest.mark.parametrize("n", [3, 4])
def test_descents_and_minimum_on_staircases(n):
    for q in enumerate_syt(staircase(n)):
        assert check_descents(q).ok and check_minimal(q).ok
        assert all(weak_descents(w) == weak_descents(column_word(q)) for w in enumerate_WQ(q))


def test_exactly_one_reduced_word_per_tableau():
    for q in enumerate_syt(staircase(4)):
        assert build_poset(q).reduced_elements() == [eg_inverse(q)]


def test_minimal_report_flags_other_shapes():
    rep = check_minimal(T((1, 3), (2, 4)))
    assert rep.ok and rep.notes["exploratory"] == "non-staircase shape"


def test_conjecture_report_on_worked_example():
    rep = check_conjecture_height(Q_EXAMPLE)
    assert rep.ok and rep.notes["height"] == rep.notes["slide_sum"] == 3
    assert rep.notes["status"] == "holds"


@pytest.mark.parametrize("n, eta", [(3, (1, 1)), (4, (2, 2, 8, 2, 2))])
def test_eta_small(n, eta):
    assert eta_table(n) == eta
    assert sum(eta) == count_syt(staircase(n)) and len(eta) == comb(n, 3) + 1


@pytest.mark.parametrize("n", [4, 5])
def test_consequences(n):
    records = height_records(n)
    rep = check_consequences(n, records)
    assert rep.ok, rep.failures[:3]
    assert all(r.top_is_maximal and r.bottom_ok and r.descents_ok for r in records)
    assert all(r.height == r.slide_sum and r.reduced_count == 1 for r in records)
    eta = rep.notes["eta"]
    assert sum(eta) == count_syt(staircase(n))


def test_eta_six_needs_long_run():
    with pytest.raises(ValueError):
        eta_table(6)


def test_maximal_element_need_not_be_unique():
    network = (4, 5, 2, 1, 3, 4, 3, 2, 1, 3, 2, 4, 5, 4, 3)
    other = (2, 4, 3, 1, 3, 4, 3, 2, 1, 3, 2, 4, 5, 4, 3)
    assert network in set(enumerate_networks(6))
    q = eg_map(network)[1]
    assert eg_inverse(q) == network
    poset = build_poset(q, cap=15)
    assert len(poset) == 145
    assert poset.maximal_elements() == [other, network]
    # the interval below the network still has the predicted height
    assert interval_height(poset, column_word(q), network) == right_slide_total(q)
