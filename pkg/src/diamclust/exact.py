"""Exact brute-force oracles, driven by maximum clique on disc graphs.

These are desk-scale reference solvers with an explicit vertex cap; the
approximation guarantees are checked against them.
"""

import numpy as np
from scipy.spatial.distance import pdist

from .errors import OracleCapExceeded, PreconditionError
from .geometry import Ball, PointSet, diameter, disc_graph
from .graphs import maximum_clique
from .approx import Solution

DEFAULT_CAP = 25


def _clique_solution(P: PointSet, indices: tuple[int, ...]) -> Solution:
    center = P.coords[indices[0]]
    radius = float(np.linalg.norm(P.coords[list(indices)] - center, axis=1).max())
    return Solution(
        indices=indices,
        achieved_diameter=diameter(P, indices),
        ball=Ball(center, radius),
        provenance=indices,
    )


def brute_force_max(P: PointSet, r: float, cap: int = DEFAULT_CAP) -> Solution:
    """Exact maximum-cardinality subset of diameter <= r, as the
    lexicographically smallest maximum clique of the disc graph."""
    n = len(P)
    if n == 0:
        raise ValueError("point set is empty")
    if n > cap:
        raise OracleCapExceeded(f"n={n} exceeds the exact-oracle cap {cap}")
    if r < 0:
        raise ValueError("r must be nonnegative")
    clique = maximum_clique(disc_graph(P, r))
    return _clique_solution(P, tuple(sorted(clique)))


def brute_force_min_diameter(P: PointSet, k_target: int, cap: int = DEFAULT_CAP) -> Solution:
    """Exact minimum-diameter subset of exactly k_target points, by scanning
    the sorted pairwise distances with brute_force_max."""
    n = len(P)
    if n == 0:
        raise ValueError("point set is empty")
    if n > cap:
        raise OracleCapExceeded(f"n={n} exceeds the exact-oracle cap {cap}")
    if not 1 <= k_target <= n:
        raise PreconditionError(f"k_target must be between 1 and {n}, got {k_target}")
    radii = [0.0]
    if n > 1:
        radii.extend(float(v) for v in np.unique(pdist(P.coords)))
    for rc in radii:
        sol = brute_force_max(P, rc, cap)
        if sol.size >= k_target:
            # the scan order makes any k_target-subset of this clique optimal
            return _clique_solution(P, sol.indices[:k_target])
    raise AssertionError("unreachable: the largest pairwise distance covers the whole set")
