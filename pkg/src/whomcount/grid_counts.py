"""Weak homomorphisms from the path P_m into the grid P_n □ P_k.

Every step of a map into the grid either moves the first coordinate, or
moves/keeps the second one.  Splitting a map by the number ``h`` of
first-coordinate moves gives a walk of ``h + 1`` vertices on ``P_n``
(a homomorphism) and a weak homomorphism of ``m - h`` vertices into
``P_k``, interleaved in ``C(m-1, h)`` ways.

Totals group the ``n * k`` anchors by the reflections of the grid, so only
one quadrant (plus midlines for odd sides) has to be evaluated.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import binomial
from .errors import InvalidAnchorError, InvalidQueryError
from .path_counts import hom_anchored, whom_anchored

__all__ = [
    "GridQuery",
    "whom_grid_anchored",
    "whom_grid_total",
    "whom_grid_total_direct",
    "anchor_orbit",
]


@dataclass(frozen=True)
class GridQuery:
    m: int
    n: int
    k: int
    anchor: tuple[int, int] | None = None

    def __post_init__(self):
        if min(self.m, self.n, self.k) < 1:
            raise InvalidQueryError(
                f"m, n, k must be positive, got m={self.m}, n={self.n}, k={self.k}"
            )
        if self.anchor is not None:
            i, j = self.anchor
            if not (0 <= i < self.n and 0 <= j < self.k):
                raise InvalidAnchorError(
                    f"anchor {self.anchor} is outside the {self.n}x{self.k} grid"
                )


def whom_grid_anchored(m: int, n: int, k: int, i: int, j: int) -> int:
    """Number of weak homomorphisms ``f: P_m -> P_n □ P_k`` with ``f(0) = (i, j)``.

    >>> whom_grid_anchored(4, 4, 5, 0, 0)
    43
    """
    GridQuery(m, n, k, (i, j))
    return sum(
        binomial(m - 1, h) * hom_anchored(h + 1, n, i) * whom_anchored(m - h, k, j)
        for h in range(m)
    )


def whom_grid_total(m: int, n: int, k: int) -> int:
    """Number of weak homomorphisms ``P_m -> P_n □ P_k``, any image of vertex 0.

    Anchors in the same reflection orbit share a count, so the lower-left
    quadrant is weighted by 4, midline anchors (odd side lengths) by 2
    and the centre (both sides odd) by 1.

    >>> whom_grid_total(2, 2, 2)
    12
    """
    GridQuery(m, n, k)
    half_n, half_k = n // 2, k // 2
    odd_n, odd_k = n % 2, k % 2

    total = 4 * sum(
        whom_grid_anchored(m, n, k, i, j) for i in range(half_n) for j in range(half_k)
    )
    if odd_n:
        total += 2 * sum(whom_grid_anchored(m, n, k, half_n, j) for j in range(half_k))
    if odd_k:
        total += 2 * sum(whom_grid_anchored(m, n, k, i, half_k) for i in range(half_n))
    if odd_n and odd_k:
        total += whom_grid_anchored(m, n, k, half_n, half_k)
    return total


def whom_grid_total_direct(m: int, n: int, k: int) -> int:
    """Plain sum of :func:`whom_grid_anchored` over all ``n * k`` anchors."""
    GridQuery(m, n, k)
    return sum(whom_grid_anchored(m, n, k, i, j) for i in range(n) for j in range(k))


def anchor_orbit(n: int, k: int, i: int, j: int) -> frozenset[tuple[int, int]]:
    """Images of ``(i, j)`` under the reflections of both grid axes.

    >>> sorted(anchor_orbit(5, 4, 2, 1))
    [(2, 1), (2, 2)]
    """
    GridQuery(1, n, k, (i, j))
    return frozenset((a, b) for a in (i, n - 1 - i) for b in (j, k - 1 - j))
