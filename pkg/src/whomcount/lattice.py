"""Shortest-path counts in the cubic lattice and its r-ladder restriction.

A monotone path from the origin to ``(i, j, k)`` takes ``i`` steps along
the first axis, ``j`` along the second and ``k`` along the third.  When a
path in this lattice encodes a weak homomorphism of paths, the axes stand
for "move right", "move left" and "stay".

The r-ladder lattice keeps only points with ``j - i <= r``: the walker
never gets more than ``r`` net steps to the left of where it started.
Counts there follow from the reflection principle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import multinomial3
from .errors import InvalidQueryError

__all__ = [
    "LatticePoint",
    "shortest_path_count",
    "ladder_shortest_path_count",
    "ladder_dp_count",
]


@dataclass(frozen=True)
class LatticePoint:
    i: int
    j: int
    k: int

    def __post_init__(self):
        if min(self.i, self.j, self.k) < 0:
            raise InvalidQueryError(f"lattice coordinates must be nonnegative, got {self}")

    @property
    def length(self) -> int:
        return self.i + self.j + self.k


def _point(p) -> LatticePoint:
    return p if isinstance(p, LatticePoint) else LatticePoint(*p)


def shortest_path_count(p: LatticePoint | tuple[int, int, int]) -> int:
    """Number of shortest paths from the origin to ``p``: a trinomial coefficient."""
    p = _point(p)
    return multinomial3(p.i, p.j, p.k)


def ladder_shortest_path_count(r: int, p: LatticePoint | tuple[int, int, int]) -> int:
    """Number of shortest paths to ``p`` that stay inside ``{j - i <= r}``.

    Paths that cross the barrier ``j - i = r + 1`` are reflected at their
    first crossing, which sends them bijectively onto the unrestricted
    paths to ``(j - r - 1, i + r + 1, k)``.  Endpoints outside the region
    are unreachable and count 0; the bare difference would go negative
    there.
    """
    if r < 0:
        raise InvalidQueryError(f"ladder width must be nonnegative, got {r}")
    p = _point(p)
    if p.j - p.i > r:
        return 0
    return multinomial3(p.i, p.j, p.k) - multinomial3(p.j - r - 1, p.i + r + 1, p.k)


def ladder_dp_count(r: int, p: LatticePoint | tuple[int, int, int]) -> int:
    """Same count as :func:`ladder_shortest_path_count`, by direct 3-axis DP.

    Every visited point is checked against ``j - i <= r``; no reflection
    is used.  Kept as an independent check on the closed form.
    """
    if r < 0:
        raise InvalidQueryError(f"ladder width must be nonnegative, got {r}")
    p = _point(p)
    ways: dict[tuple[int, int, int], int] = {}
    for a in range(p.i + 1):
        for b in range(p.j + 1):
            for c in range(p.k + 1):
                if b - a > r:
                    ways[a, b, c] = 0
                    continue
                if a == b == c == 0:
                    ways[a, b, c] = 1
                    continue
                ways[a, b, c] = (
                    ways.get((a - 1, b, c), 0)
                    + ways.get((a, b - 1, c), 0)
                    + ways.get((a, b, c - 1), 0)
                )
    return ways[p.i, p.j, p.k]
