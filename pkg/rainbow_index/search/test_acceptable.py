import logging
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pytest import mark
from scipy.special import comb

from rainbow_index.construct import ACCEPT8, FIVE_COLOR_CODES, REMAINING_FIVE_COLOR_CODES, rx3_value
from rainbow_index.search import (
    BudgetExceededError,
    CodeMultiset,
    RookPlacement,
    beta,
    brute_force_rx3,
    brute_force_rx3_search,
    find_acceptable,
    is_acceptable,
    is_canonical,
    is_isolated,
    max_acceptable,
    max_acceptable_search,
    permute,
)


@pytest.fixture(scope="module")
def four_color_search():
    return max_acceptable_search(4)


@mark.parametrize(
    "k,codes,expected",
    [
        (3, [(1, 2), (2, 1), (1, 3), (3, 1)], True),
        (3, [(1, 2), (1, 2), (1, 2)], False),
        (4, [(1, 2), (1, 2), (3, 4)], True),
        (4, [(1, 2), (1, 2)], False),
        (2, [(1, 1)], False),
    ],
)
def test_is_acceptable(k, codes, expected):
    assert is_acceptable(CodeMultiset(k, tuple(codes))) is expected


def test_removing_a_code_can_break_acceptability():
    whole = CodeMultiset(4, ((1, 2), (1, 2), (3, 4)))
    assert is_acceptable(whole)
    assert not is_acceptable(CodeMultiset(4, whole.codes[:2]))


@given(
    st.integers(2, 5).flatmap(
        lambda k: st.tuples(
            st.just(k),
            st.lists(st.tuples(st.integers(1, k), st.integers(1, k)), min_size=1, max_size=6),
            st.permutations(range(1, k + 1)),
        )
    )
)
@settings(max_examples=100, deadline=None)
def test_acceptability_is_color_permutation_invariant(case):
    k, codes, sigma = case
    m = CodeMultiset(k, tuple(codes))
    assert is_acceptable(m) == is_acceptable(permute(m, sigma))


def test_rook_model_matches_three_colors():
    off_diagonal = [(a, b) for a, b in permutations(range(1, 4), 2)]
    for size in range(1, len(off_diagonal) + 1):
        for codes in combinations(off_diagonal, size):
            assert is_acceptable(CodeMultiset(3, codes)) == is_isolated(RookPlacement(3, codes)), codes


@mark.parametrize("b,expected", [(1, 1), (2, 2), (3, 4)])
def test_beta(b, expected):
    assert beta(b) == expected


@mark.parametrize("b,k_ambient,colors", [(2, 4, (1, 4)), (3, 5, (2, 4, 5)), (3, 4, (1, 2, 3))])
def test_beta_does_not_depend_on_the_color_set(b, k_ambient, colors):
    assert beta(b, k_ambient, colors=colors) == beta(b)


@mark.parametrize("b,k_ambient,colors", [(4, None, None), (0, None, None), (3, 2, None), (2, 4, (1, 5))])
def test_beta_rejects(b, k_ambient, colors):
    with pytest.raises(ValueError):
        beta(b, k_ambient, colors=colors)


def test_max_acceptable_three_colors():
    record = max_acceptable_search(3)
    assert record.result == 4
    assert record.params == {"k": 3, "distinct_only": False, "t_cap": 7}
    assert is_acceptable(record.witness)


def test_max_acceptable_four_colors(four_color_search):
    assert four_color_search.result == 8
    assert len(four_color_search.witness) == 8
    assert is_acceptable(four_color_search.witness)


def test_accept8(four_color_search):
    m = CodeMultiset(4, ACCEPT8)
    assert m.codes == ACCEPT8
    assert is_canonical(ACCEPT8, 4)
    assert is_acceptable(m)
    assert len(ACCEPT8) == four_color_search.result
    for size in range(1, len(ACCEPT8)):
        for codes in combinations(ACCEPT8, size):
            assert is_acceptable(CodeMultiset(4, codes)), codes


def test_max_acceptable_five_distinct_colors():
    with pytest.warns(UserWarning):
        assert max_acceptable(5, distinct_only=True, t_cap=21) == 20
    assert is_acceptable(CodeMultiset(5, FIVE_COLOR_CODES + REMAINING_FIVE_COLOR_CODES))


@mark.parametrize("t", range(1, 10))
def test_brute_force_matches_closed_form(t):
    assert brute_force_rx3(t, 5) == rx3_value(t)


def test_brute_force_reports_exceeding_k_max():
    record = brute_force_rx3_search(5, k_max=3)
    assert record.result is None
    assert record.to_document()["result"] is None


def test_budget_refusals():
    with pytest.raises(BudgetExceededError) as e:
        max_acceptable(5)
    assert e.value.estimate == comb(25 + 21 - 1, 21, exact=True)
    with pytest.raises(BudgetExceededError) as e:
        brute_force_rx3(10, 5)
    assert e.value.estimate == comb(34, 10, exact=True)
    with pytest.raises(BudgetExceededError):
        brute_force_rx3(3, 3, budget=10)


def test_parallel_search_matches_sequential():
    assert find_acceptable(4, 6, jobs=2) == find_acceptable(4, 6)
    assert find_acceptable(3, 5, jobs=3) == find_acceptable(3, 5)
    assert max_acceptable_search(3, jobs=2) == max_acceptable_search(3)


def test_search_record_document():
    record = max_acceptable_search(2)
    assert record.to_document() == {
        "op": "max_acceptable",
        "params": {"k": 2, "distinct_only": False, "t_cap": 3},
        "result": record.result,
        "candidates_examined": record.candidates_examined,
    }


def test_progress_is_logged(caplog, monkeypatch):
    expected = find_acceptable(3, 4)
    monkeypatch.setattr("rainbow_index.search.acceptable.PROGRESS_EVERY", 1)
    with caplog.at_level(logging.INFO, logger="rainbow_index.search.acceptable"):
        assert find_acceptable(3, 4) == expected
    progress = [r.getMessage() for r in caplog.records if "prefixes visited" in r.getMessage()]
    assert progress
    assert progress[0].startswith("size 4: 1 prefixes visited")
