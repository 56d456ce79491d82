import pytest
from hypothesis import given, strategies as st

import oracles
from egkit.insertion import (
    Report, eg_insert_letter, eg_map, frozen_region, insertion_trace, is_frozen,
    verify_frozen_equals_diagram, verify_symmetries,
)
from egkit.networks import enumerate_all_reduced_words, enumerate_networks, enumerate_reduced_words
from egkit.permutations import all_perms, avoids_132, compose_word, rothe_diagram, top_left_component
from egkit.tableaux import Tableau, count_syt, reading_word, staircase, sub_partitions

T = Tableau.of


@pytest.mark.parametrize("p, x, expected, cell", [
    (T((1, 2), (2,)), 2, T((1, 2), (2, 3)), (2, 2)),
    (T((1, 2, 3)), 5, T((1, 2, 3, 5)), (1, 4)),
    (T((1, 3), (2,)), 2, T((1, 2), (2, 3)), (2, 2)),
    (Tableau(()), 4, T((4,)), (1, 1)),
])
def test_insert_letter(p, x, expected, cell):
    assert eg_insert_letter(p, x) == (expected, cell)


@pytest.mark.parametrize("word, p, q", [
    ((3, 2, 1, 2, 3, 2), T((1, 2, 3), (2, 3), (3,)), T((1, 4, 5), (2, 6), (3,))),
    ((), Tableau(()), Tableau(())),
    ((1, 2, 1), T((1, 2), (2,)), T((1, 2), (3,))),
])
def test_eg_map_examples(word, p, q):
    assert eg_map(word) == (p, q)


def test_trace_of_worked_example():
    states = [t for t, _ in insertion_trace((3, 2, 1, 2, 3, 2))]
    assert states == [
        T((3,)),
        T((2,), (3,)),
        T((1,), (2,), (3,)),
        T((1, 2), (2,), (3,)),
        T((1, 2, 3), (2,), (3,)),
        T((1, 2, 3), (2, 3), (3,)),
    ]


def test_trace_single_letter_and_shifted_network():
    assert insertion_trace((1,)) == [(T((1,)), (1,))]
    assert insertion_trace((2,)) == [(T((2,)), ())]
    assert all(is_frozen(t) for t, _ in insertion_trace((1, 2, 1, 3, 2, 1)))


@pytest.mark.parametrize("p, shape", [
    (T((1, 2, 4), (2, 3, 5), (3, 4), (4, 5)), (2, 2, 2, 2)),
    (T((1, 2, 3), (2, 3), (3,)), (3, 2, 1)),
    (T((2,), (3,)), ()),
])
def test_frozen_region(p, shape):
    assert frozen_region(p) == shape
    assert is_frozen(p) == (shape == p.shape)


@given(st.lists(st.integers(1, 6), max_size=12))
def test_insertion_against_oracle(word):
    p, q = eg_map(word)
    op, oq = oracles.eg(word)
    assert p.rows == op and q.rows == oq
    assert p.shape == q.shape
    assert p.is_increasing() and (not word or q.is_standard())
    assert frozen_region(p) == oracles.frozen_shape(op)


@given(st.lists(st.integers(1, 6), max_size=12))
def test_shapes_agree_after_every_prefix(word):
    for k in range(len(word) + 1):
        p, q = eg_map(word[:k])
        assert p.shape == q.shape


@pytest.mark.parametrize("n", range(2, 6))
def test_reading_word_properties(n):
    for w, sigma in enumerate_all_reduced_words(n):
        p, _ = eg_map(w)
        r = reading_word(p)
        assert eg_map(r)[0] == p
        assert len(r) == len(w) and compose_word(r, n) == sigma


@pytest.mark.parametrize("n", range(2, 6))
def test_frozen_iff_132_avoiding(n):
    for w, sigma in enumerate_all_reduced_words(n):
        assert is_frozen(eg_map(w)[0]) == avoids_132(sigma)


@pytest.mark.parametrize("n", range(2, 6))
def test_132_avoiding_shapes_biject(n):
    """Each sub-staircase shape is the diagram of exactly one 132-avoiding sigma,
    and EG maps R(sigma) onto SYT of that shape."""
    shapes = {}
    for sigma in all_perms(n):
        if not avoids_132(sigma):
            continue
        lam = top_left_component(rothe_diagram(sigma))
        assert lam not in shapes
        shapes[lam] = sigma
        qs = [eg_map(w)[1] for w in enumerate_reduced_words(sigma)]
        assert all(q.shape == lam for q in qs)
        assert len(set(qs)) == len(qs) == count_syt(lam)
    assert set(shapes) == set(sub_partitions(staircase(n)))


def test_verify_frozen_on_six_letter_permutation():
    sigma = (5, 6, 1, 4, 2, 3)
    for w in enumerate_reduced_words(sigma):
        rep = verify_frozen_equals_diagram(w, 6)
        assert rep.ok, rep.failures
    assert frozen_region(eg_map(w)[0]) == (2, 2, 2, 2)


def test_verify_frozen_empty_word_and_rejects_non_reduced():
    assert verify_frozen_equals_diagram((), 4).ok
    with pytest.raises(ValueError):
        verify_frozen_equals_diagram((1, 1), 3)


@pytest.mark.parametrize("n", range(2, 5))
def test_verify_frozen_all_words(n):
    for w, _ in enumerate_all_reduced_words(n):
        assert verify_frozen_equals_diagram(w, n).ok


def test_symmetries_worked_example():
    from egkit.promotion import evacuation

    w = (3, 2, 1, 2, 3, 2)
    q_rev = eg_map((2, 3, 2, 1, 2, 3))[1]
    assert q_rev == evacuation(eg_map(w)[1]) == T((1, 2, 6), (3, 5), (4,))
    assert verify_symmetries(w, 4).ok


def test_symmetries_palindrome_and_networks():
    rep = verify_symmetries((1, 2, 1), 3)
    assert rep.ok and rep.checked == 3
    for w in enumerate_networks(4):
        assert verify_symmetries(w, 4).ok


def test_symmetries_off_networks_only_check_p():
    rep = verify_symmetries((1, 2), 3)
    assert rep.ok
    # Q(21) is a column, Q(12) a row: the evacuation identity is not in play
    assert rep.notes["q_reverse_holds"] is False


def test_report_formatting():
    rep = Report("demo")
    rep.checked = 2
    assert str(rep) == "PASS demo [2 checked]"
    rep.fail("boom")
    assert not rep.ok and str(rep).startswith("FAIL")
    assert rep.to_dict()["failures"] == [repr("boom")]
