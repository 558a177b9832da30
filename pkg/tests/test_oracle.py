import pytest

from whomcount.errors import InvalidAnchorError, InvalidQueryError
from whomcount.oracle import (
    SimpleGraph,
    brute_force_count,
    cartesian_product,
    dp_walk_count,
    grid_graph,
    grid_vertex,
    path_graph,
)
from whomcount.path_counts import path_walk_dp


def test_path_graph():
    assert path_graph(1).edges == []
    assert path_graph(2).edges == [(0, 1)]
    assert len(path_graph(5).edges) == 4
    with pytest.raises(InvalidQueryError):
        path_graph(0)


def test_cartesian_product():
    square = cartesian_product(path_graph(2), path_graph(2))
    assert square.order == 4 and len(square.edges) == 4
    assert all(len(nbrs) == 2 for nbrs in square.adjacency)

    g = path_graph(5)
    assert cartesian_product(path_graph(1), g) == g

    grid = cartesian_product(path_graph(4), path_graph(5))
    assert grid.order == 20 and len(grid.edges) == 5 * 3 + 4 * 4
    # row-major: (1, 2) is adjacent to (0, 2), (2, 2), (1, 1), (1, 3)
    v = grid_vertex(5, 1, 2)
    assert set(grid.adjacency[v]) == {grid_vertex(5, *p) for p in [(0, 2), (2, 2), (1, 1), (1, 3)]}


def test_simple_graph_rejects_bad_adjacency():
    with pytest.raises(InvalidQueryError):
        SimpleGraph(2, ((1,), ()))
    with pytest.raises(InvalidQueryError):
        SimpleGraph(1, ((0,),))


def test_brute_force_examples():
    g = path_graph(4)
    assert brute_force_count(1, g, weak=True) == 4
    assert brute_force_count(2, grid_graph(2, 2), weak=True) == 12
    assert brute_force_count(4, grid_graph(4, 5), grid_vertex(5, 0, 0), weak=True) == 43


def test_dp_examples():
    assert dp_walk_count(3, path_graph(2)) == 2
    assert dp_walk_count(3, path_graph(2), weak=True) == 8
    assert dp_walk_count(8, grid_graph(8, 8), weak=True) == 2951832


def small_graphs():
    for n in range(1, 5):
        yield path_graph(n)
        for k in range(1, 5):
            yield grid_graph(n, k)


def test_dp_matches_brute_force():
    for g in small_graphs():
        for m in range(1, 7):
            for weak in (False, True):
                assert dp_walk_count(m, g, weak=weak) == brute_force_count(m, g, weak=weak)
                for v in range(g.order):
                    assert dp_walk_count(m, g, v, weak) == brute_force_count(m, g, v, weak)


def test_counts_invariant_under_automorphisms():
    for n in range(1, 5):
        for k in range(1, 5):
            g = grid_graph(n, k)
            flips = [
                [grid_vertex(k, n - 1 - i, j) for i in range(n) for j in range(k)],
                [grid_vertex(k, i, k - 1 - j) for i in range(n) for j in range(k)],
            ]
            for perm in flips:
                h = g.relabel(perm)
                assert h == g
                for m in range(1, 6):
                    assert brute_force_count(m, h, weak=True) == brute_force_count(m, g, weak=True)
                    for v in range(g.order):
                        assert brute_force_count(m, g, v, True) == brute_force_count(m, g, perm[v], True)


def test_general_dp_matches_path_dp():
    for n in range(1, 9):
        g = path_graph(n)
        for m in range(1, 9):
            for j in range(n):
                for weak in (False, True):
                    assert dp_walk_count(m, g, j, weak) == path_walk_dp(m, n, j, allow_stay=weak)


def test_invalid_anchor():
    with pytest.raises(InvalidAnchorError):
        brute_force_count(2, path_graph(3), 3)
    with pytest.raises(InvalidAnchorError):
        dp_walk_count(2, path_graph(3), -1)
