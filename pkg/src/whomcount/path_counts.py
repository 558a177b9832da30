"""Counting (weak) homomorphisms from the path P_m into the path P_n.

A homomorphism ``f: P_m -> P_n`` with ``f(0) = j`` is the same thing as a
walk on ``{0, ..., n-1}`` with ``m`` vertices starting at ``j``; a weak
homomorphism additionally allows the walker to stay put.  We provide
closed forms for both anchored counts, a transfer-matrix DP valid for any
``m, n``, and dispatchers that pick whichever applies.

The closed forms only need the zero-outside-domain binomials and the
ladder-lattice counts; sums whose lower bound exceeds the upper bound are
empty.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import binomial, ceil_div, floor_div, multinomial3
from .errors import InvalidAnchorError, InvalidQueryError, OutOfDomainError
from .lattice import ladder_shortest_path_count

__all__ = [
    "PathQuery",
    "hom_anchored",
    "hom_anchored_reduced",
    "whom_anchored_closed",
    "whom_anchored",
    "path_walk_dp",
    "hom_total",
    "whom_total",
]


@dataclass(frozen=True)
class PathQuery:
    """Validated ``(m, n, anchor)`` for a count of maps ``P_m -> P_n``."""

    m: int
    n: int
    anchor: int | None = None

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise InvalidQueryError(f"path orders must be positive, got m={self.m}, n={self.n}")
        if self.anchor is not None and not 0 <= self.anchor < self.n:
            raise InvalidAnchorError(
                f"anchor must lie in [0, {self.n - 1}], got {self.anchor}"
            )


def _check(m: int, n: int, j: int) -> None:
    PathQuery(m, n, j)


def hom_anchored(m: int, n: int, j: int) -> int:
    """Number of homomorphisms ``f: P_m -> P_n`` with ``f(0) = j``.

    Valid for every ``m, n >= 1``.  Walks that would leave the path are
    removed by alternating reflections in the two barriers at ``-1`` and
    ``n``; the window ``|t| <= (m + n) // n`` covers every reflection that
    can contribute.

    >>> hom_anchored(4, 5, 1)
    6
    """
    _check(m, n, j)
    lo = max(0, ceil_div(m - j - 1, 2))
    hi = min(m - 1, floor_div(m + n - j - 2, 2))
    reach = (m + n) // n
    total = 0
    for i in range(lo, hi + 1):
        for t in range(-reach, reach + 1):
            shift = t * (n + 1)
            total += binomial(m - 1, i - shift) - binomial(m - 1, i + j - shift + 1)
    return total


def hom_anchored_reduced(m: int, n: int, j: int) -> int:
    """Three-sum form of :func:`hom_anchored` for ``m <= n``.

    With ``m <= n`` at most one reflection per barrier matters, which
    collapses the double sum into partial row sums of Pascal's triangle.
    """
    _check(m, n, j)
    if m > n:
        raise OutOfDomainError(f"reduced form needs m <= n, got m={m}, n={n}")
    slack = j - (n - m)
    main = sum(binomial(m - 1, t) for t in range(max(0, ceil_div(slack, 2)), ceil_div(m + j, 2)))
    far = sum(binomial(m - 1, t) for t in range(floor_div(slack, 2)))
    near = sum(binomial(m - 1, t) for t in range(floor_div(m - j - 1, 2)))
    return main - far - near


def whom_anchored_closed(m: int, n: int, j: int) -> int:
    """Number of weak homomorphisms ``f: P_m -> P_n`` with ``f(0) = j``, for ``m <= n``.

    Each map is a shortest path in the cubic lattice from the origin to
    some ``(s, t, m-1-s-t)`` (s right-moves, t left-moves, the rest
    stays).  The endpoints split into four regions by how far the walker
    can get toward each end of ``P_n``:

    1. more left-moves than ``j`` (ladder of width ``j``),
    2. few enough left-moves that neither wall can be reached,
    3. a rectangle where both are bounded but neither wall binds,
    4. more right-moves than ``n - j - 1`` (ladder of width ``n - j - 1``,
       with the first two axes swapped).
    """
    _check(m, n, j)
    if m > n:
        raise OutOfDomainError(f"closed form needs m <= n, got m={m}, n={n}")
    last = m - 1
    right_room = n - j - 1
    total = 0

    for t in range(j + 1, j + floor_div(m - j - 1, 2) + 1):
        for s in range(t - j, last - t + 1):
            total += ladder_shortest_path_count(j, (s, t, last - s - t))

    for t in range(max(j - n + m + 1, 0), j + 1):
        for s in range(0, last - t + 1):
            total += multinomial3(s, t, last - s - t)

    for t in range(0, j - n + m + 1):
        for s in range(0, right_room + 1):
            total += multinomial3(s, t, last - s - t)

    for t in range(right_room + 1, right_room + floor_div(j - n + m, 2) + 1):
        for s in range(t - right_room, last - t + 1):
            total += ladder_shortest_path_count(right_room, (s, t, last - s - t))

    return total


def path_walk_dp(m: int, n: int, j: int | None = None, allow_stay: bool = False) -> int:
    """Count walks with ``m`` vertices on ``P_n`` by transfer-matrix iteration.

    With ``allow_stay`` each step may also remain in place, which counts
    weak homomorphisms.  ``j=None`` sums over all starting vertices.

    >>> path_walk_dp(3, 2, 0, allow_stay=True)
    4
    """
    PathQuery(m, n, j)
    if j is None:
        counts = [1] * n
    else:
        counts = [0] * n
        counts[j] = 1
    for _ in range(m - 1):
        nxt = [0] * n
        for x, c in enumerate(counts):
            if not c:
                continue
            if allow_stay:
                nxt[x] += c
            if x > 0:
                nxt[x - 1] += c
            if x < n - 1:
                nxt[x + 1] += c
        counts = nxt
    return sum(counts)


def whom_anchored(m: int, n: int, j: int) -> int:
    """Anchored weak-homomorphism count for any ``m``.

    Uses the closed form when ``m <= n`` and the DP otherwise.

    >>> whom_anchored(4, 5, 2)
    25
    """
    _check(m, n, j)
    if m <= n:
        return whom_anchored_closed(m, n, j)
    return path_walk_dp(m, n, j, allow_stay=True)


def hom_total(m: int, n: int) -> int:
    PathQuery(m, n)
    return sum(hom_anchored(m, n, j) for j in range(n))


def whom_total(m: int, n: int) -> int:
    PathQuery(m, n)
    return sum(whom_anchored(m, n, j) for j in range(n))
