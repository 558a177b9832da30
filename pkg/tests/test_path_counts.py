from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from whomcount.errors import InvalidAnchorError, InvalidQueryError, OutOfDomainError
from whomcount.path_counts import (
    PathQuery,
    hom_anchored,
    hom_anchored_reduced,
    hom_total,
    path_walk_dp,
    whom_anchored,
    whom_anchored_closed,
    whom_total,
)


def enumerate_maps(m, n, j=None, weak=False):
    """Count maps {0..m-1} -> {0..n-1} directly from the definition."""
    count = 0
    for f in product(range(n), repeat=m):
        if j is not None and f[0] != j:
            continue
        if all(abs(a - b) == 1 or (weak and a == b) for a, b in zip(f, f[1:])):
            count += 1
    return count


@pytest.mark.parametrize("m, n, j, expected", [(2, 2, 0, 1), (4, 5, 1, 6), (1, 7, 3, 1)])
def test_hom_anchored_examples(m, n, j, expected):
    assert hom_anchored(m, n, j) == expected


@pytest.mark.parametrize("m, n, j, expected", [(4, 4, 0, 3), (5, 7, 2, 14), (8, 8, 3, 103)])
def test_hom_anchored_reduced_examples(m, n, j, expected):
    assert hom_anchored_reduced(m, n, j) == expected


@pytest.mark.parametrize("m, n, j, expected", [(4, 5, 0, 13), (4, 5, 1, 22), (8, 8, 3, 1994)])
def test_whom_anchored_closed_examples(m, n, j, expected):
    assert whom_anchored_closed(m, n, j) == expected


@pytest.mark.parametrize(
    "m, n, j, stay, expected",
    [(3, 2, 0, True, 4), (4, 5, 0, True, 13), (2, 2, 0, False, 1)],
)
def test_path_walk_dp_examples(m, n, j, stay, expected):
    assert path_walk_dp(m, n, j, allow_stay=stay) == expected


def test_whom_anchored_examples():
    assert whom_anchored(4, 5, 2) == 25
    # m > n goes through the DP; 41 from enumerate_maps(5, 3, 1, weak=True)
    assert whom_anchored(5, 3, 1) == 41 == enumerate_maps(5, 3, 1, weak=True)
    assert whom_anchored(1, 4, 3) == 1


def test_totals():
    assert hom_total(2, 2) == 2
    assert whom_total(4, 5) == 95
    # all 9 maps P_2 -> P_3 minus the two that jump 0 <-> 2
    assert whom_total(2, 3) == 7 == enumerate_maps(2, 3, weak=True)


def test_closed_forms_agree_with_dp():
    for n in range(1, 11):
        for m in range(1, n + 1):
            for j in range(n):
                walks = path_walk_dp(m, n, j, allow_stay=False)
                assert hom_anchored(m, n, j) == walks, (m, n, j)
                assert hom_anchored_reduced(m, n, j) == walks, (m, n, j)
                assert whom_anchored_closed(m, n, j) == path_walk_dp(m, n, j, allow_stay=True), (m, n, j)


def test_general_hom_formula_beyond_reduced_domain():
    for n in range(1, 7):
        for m in range(n + 1, 16):
            for j in range(n):
                assert hom_anchored(m, n, j) == path_walk_dp(m, n, j), (m, n, j)


def test_reflection_symmetry():
    for m in range(1, 9):
        for n in range(1, 9):
            for j in range(n):
                assert whom_anchored(m, n, j) == whom_anchored(m, n, n - 1 - j)
                assert hom_anchored(m, n, j) == hom_anchored(m, n, n - 1 - j)


def test_monotone_in_codomain_order():
    for m in range(1, 9):
        for n in range(1, 9):
            for j in range(n):
                assert whom_anchored(m, n, j) <= whom_anchored(m, n + 1, j)


def test_matches_enumeration():
    for m in range(1, 7):
        for n in range(1, 6):
            for j in range(n):
                assert hom_anchored(m, n, j) == enumerate_maps(m, n, j), (m, n, j)
                assert whom_anchored(m, n, j) == enumerate_maps(m, n, j, weak=True), (m, n, j)
                if m <= n:
                    assert hom_anchored_reduced(m, n, j) == enumerate_maps(m, n, j)


def test_totals_are_anchor_sums():
    for m in range(1, 9):
        for n in range(1, 9):
            assert whom_total(m, n) == sum(whom_anchored(m, n, j) for j in range(n))
            assert hom_total(m, n) == sum(hom_anchored(m, n, j) for j in range(n))
            assert whom_total(m, n) == path_walk_dp(m, n, allow_stay=True)


@given(st.integers(1, 40), st.integers(1, 40), st.data())
def test_dispatcher_matches_dp(m, n, data):
    j = data.draw(st.integers(0, n - 1))
    assert whom_anchored(m, n, j) == path_walk_dp(m, n, j, allow_stay=True)
    assert hom_anchored(m, n, j) == path_walk_dp(m, n, j, allow_stay=False)


def test_single_vertex_domain():
    for n in range(1, 10):
        assert whom_total(1, n) == n
        assert hom_total(1, n) == n


def test_large_parameters_stay_exact():
    value = whom_anchored_closed(60, 60, 30)
    assert value == path_walk_dp(60, 60, 30, allow_stay=True)
    assert value > 2**64


def test_errors():
    with pytest.raises(InvalidAnchorError):
        hom_anchored(3, 4, 4)
    with pytest.raises(InvalidAnchorError):
        whom_anchored(3, 4, -1)
    with pytest.raises(OutOfDomainError):
        whom_anchored_closed(5, 4, 0)
    with pytest.raises(OutOfDomainError):
        hom_anchored_reduced(5, 4, 0)
    with pytest.raises(InvalidQueryError):
        PathQuery(0, 3)
    with pytest.raises(InvalidQueryError):
        whom_total(3, 0)
