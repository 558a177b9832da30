"""Ground-truth counters on explicit graphs.

Nothing here knows about lattices or closed forms.  Graphs are built
vertex by vertex and maps are either enumerated one at a time
(:func:`brute_force_count`) or counted by iterating the adjacency
operator (:func:`dp_walk_count`).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidAnchorError, InvalidQueryError

__all__ = [
    "SimpleGraph",
    "path_graph",
    "cartesian_product",
    "grid_graph",
    "grid_vertex",
    "brute_force_count",
    "dp_walk_count",
]


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected loop-free graph on vertices ``0..order-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``.
    """

    order: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.order < 1:
            raise InvalidQueryError("a graph needs at least one vertex")
        if len(self.adjacency) != self.order:
            raise InvalidQueryError("adjacency must list every vertex")
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise InvalidQueryError(f"loop at vertex {v}")
            if list(nbrs) != sorted(set(nbrs)):
                raise InvalidQueryError(f"neighbours of {v} must be sorted and distinct")
            for u in nbrs:
                if not 0 <= u < self.order or v not in self.adjacency[u]:
                    raise InvalidQueryError(f"edge {{{v}, {u}}} is not symmetric")

    @classmethod
    def from_edges(cls, order: int, edges) -> SimpleGraph:
        nbrs: list[set[int]] = [set() for _ in range(order)]
        for u, v in edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(order, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def relabel(self, perm) -> SimpleGraph:
        """Image of the graph under the vertex bijection ``v -> perm[v]``."""
        return SimpleGraph.from_edges(self.order, [(perm[u], perm[v]) for u, v in self.edges])


def path_graph(n: int) -> SimpleGraph:
    if n < 1:
        raise InvalidQueryError(f"path order must be positive, got {n}")
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cartesian_product(g1: SimpleGraph, g2: SimpleGraph) -> SimpleGraph:
    """G1 □ G2 with vertex ``(a, u)`` stored as ``a * g2.order + u``."""
    width = g2.order
    edges = []
    for a in range(g1.order):
        for u, v in g2.edges:
            edges.append((a * width + u, a * width + v))
    for a, b in g1.edges:
        for u in range(width):
            edges.append((a * width + u, b * width + u))
    return SimpleGraph.from_edges(g1.order * width, edges)


def grid_graph(n: int, k: int) -> SimpleGraph:
    return cartesian_product(path_graph(n), path_graph(k))


def grid_vertex(k: int, i: int, j: int) -> int:
    """Row-major label of grid vertex ``(i, j)`` in ``P_n □ P_k``."""
    return i * k + j


def _starts(g: SimpleGraph, anchor: int | None) -> range:
    if anchor is None:
        return range(g.order)
    if not 0 <= anchor < g.order:
        raise InvalidAnchorError(f"anchor {anchor} is not a vertex of a graph of order {g.order}")
    return range(anchor, anchor + 1)


def brute_force_count(m: int, g: SimpleGraph, anchor: int | None = None, weak: bool = False) -> int:
    """Count maps ``P_m -> g`` one by one.

    Maps are extended depth-first, vertex ``x+1`` taking each allowed
    image of ``f(x)`` in ascending label order (``f(x)`` itself first
    when ``weak``).  Cost grows like ``(max degree + 1) ** (m - 1)``.
    """
    if m < 1:
        raise InvalidQueryError(f"domain order must be positive, got {m}")
    choices = [
        tuple(sorted((v, *nbrs))) if weak else nbrs for v, nbrs in enumerate(g.adjacency)
    ]
    count = 0
    for start in _starts(g, anchor):
        stack = [(start, 1)]
        while stack:
            v, placed = stack.pop()
            if placed == m:
                count += 1
                continue
            for u in reversed(choices[v]):
                stack.append((u, placed + 1))
    return count


def dp_walk_count(m: int, g: SimpleGraph, anchor: int | None = None, weak: bool = False) -> int:
    """Count maps ``P_m -> g`` by ``m - 1`` sparse adjacency products.

    Adds the identity at every step when ``weak``.
    """
    if m < 1:
        raise InvalidQueryError(f"domain order must be positive, got {m}")
    counts = [0] * g.order
    for v in _starts(g, anchor):
        counts[v] = 1
    for _ in range(m - 1):
        nxt = counts[:] if weak else [0] * g.order
        for v, c in enumerate(counts):
            if c:
                for u in g.adjacency[v]:
                    nxt[u] += c
        counts = nxt
    return sum(counts)
