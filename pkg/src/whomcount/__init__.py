"""Exact counts of homomorphisms and weak homomorphisms from paths into
paths and rectangular grid graphs, with independent oracles to check them.
"""

from .combinatorics import binomial, multinomial3
from .errors import InvalidAnchorError, InvalidQueryError, OutOfDomainError
from .grid_counts import (
    GridQuery,
    anchor_orbit,
    whom_grid_anchored,
    whom_grid_total,
    whom_grid_total_direct,
)
from .lattice import LatticePoint, ladder_shortest_path_count, shortest_path_count
from .oracle import SimpleGraph, brute_force_count, cartesian_product, dp_walk_count, path_graph
from .path_counts import (
    PathQuery,
    hom_anchored,
    hom_anchored_reduced,
    hom_total,
    path_walk_dp,
    whom_anchored,
    whom_anchored_closed,
    whom_total,
)

__version__ = "0.1.0"
