import json

import pytest
from hypothesis import given, strategies as st

import oracles
from egkit.permutations import (
    InvalidLetterError, all_perms, avoids_132, avoids_312, cells_from_json,
    cells_to_json, complement_word, compose_word, contains_pattern, identity,
    inv_count, inverse, inversions, is_reduced, is_vexillary, lehmer_code,
    longest, parse_perm, parse_word, perm_from_diagram, rank, reverse_word,
    rothe_diagram, top_left_component, weak_bruhat_leq,
)


# -- composing words --------------------------------------------------------

@pytest.mark.parametrize("word, n, expected", [
    ((1, 2, 1, 3), 4, (3, 2, 4, 1)),
    ((), 5, (1, 2, 3, 4, 5)),
    ((1, 2, 1, 3, 2, 1), 4, (4, 3, 2, 1)),
])
def test_compose_word_examples(word, n, expected):
    assert compose_word(word, n) == expected


def test_compose_word_rejects_large_letter():
    with pytest.raises(InvalidLetterError):
        compose_word((1, 4), 4)


@given(st.integers(2, 7).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(1, n - 1), max_size=15))))
def test_compose_matches_oracle(case):
    n, word = case
    assert compose_word(word, n) == oracles.compose(word, n)


# -- inversions and reducedness ---------------------------------------------

@pytest.mark.parametrize("perm, expected", [
    ((1, 2, 3, 4, 5), set()),
    ((3, 2, 1), {(1, 2), (1, 3), (2, 3)}),
])
def test_inversions(perm, expected):
    assert inversions(perm) == expected
    assert inv_count(perm) == len(expected)


def test_inv_count_3241_agrees_with_word_length():
    assert inv_count((3, 2, 4, 1)) == 4 == len((1, 2, 1, 3))
    assert is_reduced((1, 2, 1, 3), 4)


@pytest.mark.parametrize("word, n, expected", [
    ((1, 2, 1), 3, True),
    ((1, 1), 3, False),
    ((3, 2, 1, 2, 3, 2), 4, True),
])
def test_is_reduced(word, n, expected):
    assert is_reduced(word, n) is expected


@given(st.integers(2, 6).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(1, n - 1), max_size=12))))
def test_inv_bounded_by_length(case):
    n, word = case
    inv = inv_count(compose_word(word, n))
    assert inv <= len(word)
    assert (inv == len(word)) == is_reduced(word, n)


# -- weak order -------------------------------------------------------------

@pytest.mark.parametrize("n", [3, 4, 5])
def test_weak_order_extremes(n):
    for sigma in all_perms(n):
        assert weak_bruhat_leq(identity(n), sigma)
        assert weak_bruhat_leq(sigma, longest(n))


def test_weak_order_incomparable_pair():
    assert not weak_bruhat_leq((2, 1, 3), (1, 3, 2))


def test_weak_order_size_mismatch():
    with pytest.raises(ValueError):
        weak_bruhat_leq((1, 2), (1, 2, 3))


# -- diagrams ---------------------------------------------------------------

def test_diagram_of_561423():
    d = rothe_diagram((5, 6, 1, 4, 2, 3))
    expected = {(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2), (4, 1), (4, 2), (2, 4), (3, 4)}
    assert d == expected
    assert top_left_component(d) == (2, 2, 2, 2)


def test_identity_diagram_is_empty():
    assert rothe_diagram(identity(5)) == frozenset()
    assert top_left_component(rothe_diagram(identity(5))) == ()


@pytest.mark.parametrize("n", range(1, 7))
def test_diagram_against_shading_oracle(n):
    for sigma in all_perms(n):
        d = rothe_diagram(sigma)
        assert d == oracles.diagram_by_shading(sigma)
        assert len(d) == inv_count(sigma)
        assert top_left_component(d) == oracles.component_of_11(d)


@pytest.mark.parametrize("n", range(1, 7))
def test_132_avoidance_iff_diagram_is_its_component(n):
    for sigma in all_perms(n):
        d = rothe_diagram(sigma)
        whole = sum(top_left_component(d)) == len(d)
        assert avoids_132(sigma) == whole


@pytest.mark.parametrize("n", range(1, 6))
def test_perm_from_diagram_inverts_rothe(n):
    # the smallest permutation with the diagram comes back; pad with fixed points
    for sigma in all_perms(n):
        found = perm_from_diagram(rothe_diagram(sigma))
        assert found + tuple(range(len(found) + 1, n + 1)) == sigma


def test_perm_from_diagram_rejects_non_diagram():
    assert perm_from_diagram({(1, 2)}) is None


# -- code and rank ----------------------------------------------------------

def test_lehmer_code_of_nine_letter_permutation():
    # the values are the column heights of the stacked construction for 813975246
    assert lehmer_code((8, 1, 3, 9, 7, 5, 2, 4, 6)) == (7, 0, 1, 5, 4, 2, 0, 0, 0)


def test_lehmer_code_identity():
    assert lehmer_code(identity(6)) == (0,) * 6


@pytest.mark.parametrize("n", range(1, 6))
def test_lehmer_code_sums_to_inversions(n):
    for sigma in all_perms(n):
        code = lehmer_code(sigma)
        assert sum(code) == inv_count(sigma)
        assert all(code[x] == sum(1 for y in sigma[x + 1:] if y < sigma[x]) for x in range(n))


@pytest.mark.parametrize("n", range(1, 6))
def test_rank(n):
    for sigma in all_perms(n):
        assert rank(sigma, n, n) == n
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                assert rank(sigma, i, j) == sum(1 for x in range(j) if sigma[x] <= i)


def test_rank_out_of_range():
    with pytest.raises(ValueError):
        rank((2, 1), 3, 1)


# -- patterns ---------------------------------------------------------------

@pytest.mark.parametrize("sigma, pattern, expected", [
    ((5, 6, 1, 4, 2, 3), (1, 3, 2), True),  # 1, 4, 2; the diagram has a second component
    ((8, 1, 3, 9, 7, 5, 2, 4, 6), (2, 1, 4, 3), False),
    ((1, 3, 2), (1, 3, 2), True),
    ((2, 1, 4, 3), (2, 1, 4, 3), True),
])
def test_contains_pattern_examples(sigma, pattern, expected):
    assert contains_pattern(sigma, pattern) is expected


@pytest.mark.parametrize("n", range(1, 7))
def test_patterns_against_oracle(n):
    for sigma in all_perms(n):
        for pattern in ((1, 3, 2), (2, 1, 3), (3, 1, 2), (2, 1, 4, 3)):
            assert contains_pattern(sigma, pattern) == oracles.contains(sigma, pattern)
        assert is_vexillary(sigma) == (not oracles.contains(sigma, (2, 1, 4, 3)))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_132_prefixes_iff_312_prefixes(n):
    from egkit.networks import enumerate_networks

    def prefix_perms(w):
        return [compose_word(w[:k], n) for k in range(len(w) + 1)]

    for w in enumerate_networks(n):
        perms = prefix_perms(w)
        assert all(map(avoids_132, perms)) == all(map(avoids_312, perms))


# -- word operations and formats -------------------------------------------

def test_reverse_and_complement():
    assert reverse_word((3, 2, 1, 2, 3, 2)) == (2, 3, 2, 1, 2, 3)
    assert complement_word((1, 2, 1, 3, 2, 1), 4) == (3, 2, 3, 1, 2, 3)
    w = (1, 2, 1, 3)
    assert compose_word(reverse_word(w), 4) == inverse(compose_word(w, 4)) == (4, 2, 1, 3)


def test_complement_rejects_large_letter():
    with pytest.raises(ValueError):
        complement_word((1, 4), 4)


@pytest.mark.parametrize("n", range(2, 6))
def test_reverse_composes_to_inverse(n):
    from egkit.networks import enumerate_all_reduced_words

    for w, sigma in enumerate_all_reduced_words(n):
        assert compose_word(reverse_word(w), n) == inverse(sigma)


@pytest.mark.parametrize("text, expected", [
    ("3 2 1 2 3 2", (3, 2, 1, 2, 3, 2)),
    ("321232", (3, 2, 1, 2, 3, 2)),
    ("10, 2 11", (10, 2, 11)),
    ("", ()),
])
def test_parse_word(text, expected):
    assert parse_word(text) == expected


@pytest.mark.parametrize("text", ["1 x 2", "0 1", "-1"])
def test_parse_word_rejects(text):
    with pytest.raises(ValueError):
        parse_word(text)


def test_parse_perm():
    assert parse_perm("3 2 4 1") == parse_perm("3241") == (3, 2, 4, 1)
    with pytest.raises(ValueError):
        parse_perm("1 1 2")


def test_cells_json_round_trip():
    d = rothe_diagram((5, 6, 1, 4, 2, 3))
    text = cells_to_json(d)
    assert json.loads(text)[0] == [1, 1]
    assert json.loads(text) == sorted(json.loads(text))
    assert cells_from_json(text) == d
