import pytest

from egkit.insertion import eg_map, frozen_region
from egkit.networks import enumerate_all_reduced_words, enumerate_reduced_words
from egkit.permutations import (
    all_perms, identity, is_vexillary, longest, perm_from_diagram, rothe_diagram,
)
from egkit.tableaux import Tableau
from egkit.vexillary import (
    ColumnArrangement, NotVexillaryError, delta_map, delta_preimage_perm,
    delta_shifts, t0_construction, t_construction, verify_vex_theorem,
)

SIGMA = (8, 1, 3, 9, 7, 5, 2, 4, 6)
T_SIGMA = Tableau.of((1, 3, 4, 5, 6), (2, 5, 6, 7), (3, 6, 7), (4, 7, 8), (5, 8), (6,), (7,))


def test_t0_of_nine_letter_permutation():
    t0 = t0_construction(SIGMA)
    assert t0.columns == ((1, 7), (3, 1), (4, 5), (5, 4), (6, 2))
    assert t0.entry(1, 1) == 1 and t0.entry(7, 1) == 7
    assert t0.entry(2, 6) == 7 and t0.entry(3, 6) is None
    assert t0.grid().splitlines()[0] == "1 . 3 4 5 6"


@pytest.mark.parametrize("sigma, columns", [
    (identity(4), ()),
    ((3, 2, 1), ((1, 2), (2, 1))),
])
def test_t0_small(sigma, columns):
    assert t0_construction(sigma) == ColumnArrangement(columns)


def test_t_of_nine_letter_permutation():
    t = t_construction(SIGMA)
    assert t == T_SIGMA
    assert delta_map(t) == rothe_diagram(SIGMA)
    assert delta_preimage_perm(t) == SIGMA


def test_t_of_reverse_permutation_is_frozen_staircase():
    t = t_construction(longest(4))
    assert t == Tableau.of((1, 2, 3), (2, 3), (3,))
    assert delta_map(t) == frozenset(t.cells())


def test_t_rejects_non_vexillary():
    with pytest.raises(NotVexillaryError):
        t_construction((2, 1, 4, 3))
    with pytest.raises(NotVexillaryError):
        verify_vex_theorem((2, 1, 4, 3))


@pytest.mark.parametrize("n", range(1, 6))
def test_t_equals_every_insertion_tableau(n):
    for sigma in all_perms(n):
        if not is_vexillary(sigma):
            continue
        t = t_construction(sigma)
        assert {eg_map(w)[0] for w in enumerate_reduced_words(sigma)} == {t}


@pytest.mark.parametrize("n", range(2, 6))
def test_delta_on_all_reduced_words(n):
    for w, sigma in enumerate_all_reduced_words(n):
        p, _ = eg_map(w)
        image = delta_map(p)  # asserts injectivity internally
        assert len(image) == p.size
        zero = {c for c, k in delta_shifts(p).items() if k == 0}
        lam = frozen_region(p)
        assert zero == {(i, j) for i, r in enumerate(lam, 1) for j in range(1, r + 1)}
        # if the image is the diagram of a vexillary permutation, sigma is vexillary
        tau = perm_from_diagram(image)
        if tau is not None and is_vexillary(tau):
            assert is_vexillary(sigma)


def test_delta_rejects_entries_below_frozen():
    with pytest.raises(AssertionError):
        delta_shifts(Tableau.of((1, 1)))


def test_verify_vex_theorem_examples():
    assert verify_vex_theorem(identity(4)).ok
    rep = verify_vex_theorem(SIGMA, limit=300)
    assert rep.ok and rep.notes["distinct_P"] == 1 and rep.checked == 300


def test_verify_vex_theorem_detects_wrong_words():
    # words of a different permutation must be flagged
    rep = verify_vex_theorem((1, 3, 2), words=[(1,)])
    assert not rep.ok
