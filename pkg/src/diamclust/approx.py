"""Shrinking-ball search for large subsets of bounded diameter.

Any set A of diameter at most r lies in a ball of radius r around each of
its points. Repeatedly re-centering on the point of A farthest from the
current center shrinks that radius toward r*sqrt(2)/2: if the farthest
point sits at distance x, the intersection of the two covering balls fits
in a ball of radius r*sqrt(1 - r^2/(4x^2)) centered on the segment between
the two centers. Enumerating all length-k pick sequences over the input
points and keeping the candidate ball that covers the most points yields a
set at least as large as the optimum with diameter at most (sqrt(2)+eps)*r.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import cdist, pdist

from .errors import PreconditionError
from .geometry import Ball, PointSet, diameter, dist, points_in_ball

_SQRT2_HALF = math.sqrt(2.0) / 2.0
_CHUNK = 1 << 16


@dataclass(frozen=True)
class ApproxConfig:
    """Knobs for the approximation: diameter slack eps, an optional explicit
    sequence length, and the absolute slack used for ball membership."""

    epsilon: float
    k_override: int | None = None
    tol: float = 1e-9

    def __post_init__(self):
        if not self.epsilon > 0:
            raise ValueError("epsilon must be positive")
        if self.k_override is not None and self.k_override < 1:
            raise ValueError("k_override must be a positive integer")
        if self.tol < 0:
            raise ValueError("tol must be nonnegative")

    def steps(self) -> int:
        return self.k_override if self.k_override is not None else steps_for_epsilon(self.epsilon)


class Advance:
    """Shrink succeeded: continue from a smaller covering ball."""

    __slots__ = ("next_center", "next_radius")

    def __init__(self, next_center: np.ndarray, next_radius: float):
        self.next_center = next_center
        self.next_radius = float(next_radius)


@dataclass(frozen=True)
class EarlyStop:
    """The farthest pick was already close enough; this ball is a candidate."""

    ball: Ball


@dataclass(frozen=True)
class Invalid:
    """The pick lies outside the current ball; the branch cannot describe a
    valid run and is discarded."""


StepOutcome = Advance | EarlyStop | Invalid


@dataclass(frozen=True)
class Solution:
    """A selected index set, its recomputed diameter, and the candidate ball
    (with the pick sequence that produced it) responsible for the selection."""

    indices: tuple[int, ...]
    achieved_diameter: float
    ball: Ball
    provenance: tuple[int, ...]
    early_stop: bool = False
    k_used: int | None = None
    candidates_examined: int | None = None

    @property
    def size(self) -> int:
        return len(self.indices)


def radius_sequence(r: float, k: int) -> np.ndarray:
    """First k terms of the shrinking radii: r_1 = r and
    r_{i+1} = r*sqrt(1 - r^2/(4 r_i^2)); strictly decreasing toward r*sqrt(2)/2."""
    if not r > 0:
        raise ValueError("r must be positive")
    if k < 1:
        raise ValueError("k must be a positive integer")
    out = np.empty(k)
    cur = float(r)
    out[0] = cur
    for i in range(1, k):
        cur = r * math.sqrt(1.0 - r * r / (4.0 * cur * cur))
        out[i] = cur
    return out


def steps_for_epsilon(epsilon: float) -> int:
    """Smallest k whose normalized final radius sqrt((k+1)/(2k)) is at most
    sqrt(2)/2 + epsilon/2, so the final ball diameter is at most (sqrt(2)+epsilon)*r."""
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    target = _SQRT2_HALF + epsilon / 2.0
    if target >= 1.0:
        return 1
    t = target * target  # in (1/2, 1): sqrt((k+1)/(2k)) <= target iff k >= 1/(2t-1)
    k0 = max(1, math.ceil(1.0 / (2.0 * t - 1.0)))
    for k in range(max(1, k0 - 3), k0 + 4):
        if math.sqrt((k + 1) / (2.0 * k)) <= target:
            return k
    raise AssertionError("unreachable: ceil window missed the threshold")


def _step(V: np.ndarray, r_cur: float, p: np.ndarray, x: float, r: float, slack: float) -> StepOutcome:
    if x > r_cur + slack:
        return Invalid()
    if x <= r * _SQRT2_HALF:
        return EarlyStop(Ball(V, x))
    coef = r * r / (2.0 * x * x)
    center = p + coef * (V - p)
    radius = r * math.sqrt(1.0 - r * r / (4.0 * x * x))
    return Advance(center, radius)


def shrink_step(V, r_cur: float, P_next, r: float) -> StepOutcome:
    """One shrinking move from ball (V, r_cur) using pick P_next.

    With x the distance from V to P_next: x > r_cur is Invalid; x at most
    r*sqrt(2)/2 stops early with Ball(V, x); otherwise the new center is the
    foot of the perpendicular from a boundary-intersection point onto the
    segment from P_next to V, at P_next + (r^2/(2x^2))(V - P_next), with
    radius r*sqrt(1 - r^2/(4x^2)).
    """
    if not r > 0:
        raise ValueError("r must be positive")
    Va = np.asarray(V, dtype=float)
    Pa = np.asarray(P_next, dtype=float)
    x = dist(Va, Pa)
    return _step(Va, float(r_cur), Pa, x, float(r), slack=0.0)


class _Candidates:
    """Accumulates candidate balls level by level and keeps the best under the
    total order: most covered points, then smaller radius, then lexicographically
    smaller pick sequence. The winner is independent of accumulation order."""

    def __init__(self, pts: np.ndarray, tol: float):
        self.pts = pts
        self.tol = tol
        self.examined = 0
        self.best: tuple[int, float, tuple[int, ...], np.ndarray, bool] | None = None

    def offer(self, centers: np.ndarray, radii: np.ndarray, prov: np.ndarray, early: bool):
        for lo in range(0, len(centers), _CHUNK):
            C = centers[lo : lo + _CHUNK]
            R = radii[lo : lo + _CHUNK]
            D = cdist(C, self.pts)
            counts = (D <= R[:, None] + self.tol).sum(axis=1)
            self.examined += len(C)
            top = int(counts.max())
            idx = np.flatnonzero(counts == top)
            rmin = float(R[idx].min())
            idx = idx[R[idx] == rmin]
            tuples = [tuple(int(t) for t in prov[lo + i]) for i in idx]
            j = min(range(len(tuples)), key=tuples.__getitem__)
            cand = (top, rmin, tuples[j], C[idx[j]], early)
            if self.best is None or self._better(cand, self.best):
                self.best = cand

    @staticmethod
    def _better(a, b) -> bool:
        if a[0] != b[0]:
            return a[0] > b[0]
        if a[1] != b[1]:
            return a[1] < b[1]
        return a[2] < b[2]


def _finish(P: PointSet, cands: _Candidates, k: int) -> Solution:
    count, radius, prov, center, early = cands.best
    ball = Ball(center, radius)
    sel = points_in_ball(P, ball, cands.tol)
    return Solution(
        indices=tuple(int(i) for i in sel),
        achieved_diameter=diameter(P, sel),
        ball=ball,
        provenance=prov,
        early_stop=early,
        k_used=k,
        candidates_examined=cands.examined,
    )


def solve_max_points(P: PointSet, r: float, cfg: ApproxConfig) -> Solution:
    """Largest-found subset coverable at target diameter r.

    Simulates every pick sequence of length k = cfg.steps() (chosen so the
    final normalized radius meets epsilon), collecting a candidate ball from
    every early stop and from every completed depth-k state; invalid branches
    are discarded. Returns the candidate covering the most points.

    Guarantees: the returned size is at least the size of the largest subset
    of diameter <= r, and the returned diameter is at most
    (sqrt(2) + epsilon) * r + 2 * cfg.tol. Runtime O(n^(k+1) * dim).
    """
    n = len(P)
    if n == 0:
        raise ValueError("point set is empty")
    if r < 0:
        raise ValueError("r must be nonnegative")
    k = cfg.steps()
    if r == 0.0:
        return _solve_zero_radius(P, cfg, k)
    pts = P.coords
    early_thresh = r * _SQRT2_HALF
    final_radius = r * math.sqrt((k + 1) / (2.0 * k))
    # validity uses the membership slack so boundary-exact picks (common in
    # symmetric and embedded inputs) cannot be lost to rounding
    slack = cfg.tol

    cands = _Candidates(pts, cfg.tol)
    centers = pts.copy()
    radii = np.full(n, float(r))
    prov = np.arange(n, dtype=np.int64)[:, None]

    for _depth in range(1, k):
        nxt_c, nxt_r, nxt_p = [], [], []
        for lo in range(0, len(centers), _CHUNK):
            C = centers[lo : lo + _CHUNK]
            R = radii[lo : lo + _CHUNK]
            PR = prov[lo : lo + _CHUNK]
            X = cdist(C, pts)
            early = X <= early_thresh
            valid = X <= R[:, None] + slack
            er, ec = np.nonzero(early)
            if er.size:
                cands.offer(C[er], X[er, ec], np.column_stack([PR[er], ec]), early=True)
            ar, ac = np.nonzero(valid & ~early)
            if ar.size:
                x = X[ar, ac]
                base = pts[ac]
                coef = (r * r) / (2.0 * x * x)
                nxt_c.append(base + coef[:, None] * (C[ar] - base))
                nxt_r.append(r * np.sqrt(1.0 - (r * r) / (4.0 * x * x)))
                nxt_p.append(np.column_stack([PR[ar], ac]))
        if not nxt_c:
            centers = np.empty((0, P.dim))
            break
        centers = np.vstack(nxt_c)
        radii = np.concatenate(nxt_r)
        prov = np.vstack(nxt_p)

    if len(centers):
        cands.offer(centers, np.full(len(centers), final_radius), prov, early=False)
    return _finish(P, cands, k)


def _solve_zero_radius(P: PointSet, cfg: ApproxConfig, k: int) -> Solution:
    # r = 0 degenerates to counting coincident points: every branch either
    # early-stops at distance 0 or is invalid
    pts = P.coords
    D = cdist(pts, pts)
    counts = (D <= cfg.tol).sum(axis=1)
    best = int(np.argmax(counts))
    ball = Ball(pts[best], 0.0)
    sel = points_in_ball(P, ball, cfg.tol)
    return Solution(
        indices=tuple(int(i) for i in sel),
        achieved_diameter=diameter(P, sel),
        ball=ball,
        provenance=(best,),
        early_stop=True,
        k_used=k,
        candidates_examined=len(P),
    )


def _greedy_truncate(pts: np.ndarray, indices: list[int], k: int) -> list[int]:
    """Drop one endpoint of the farthest pair at a time, keeping whichever
    removal leaves the smaller diameter, until exactly k indices remain."""
    sel = sorted(indices)
    while len(sel) > k:
        sub = pts[sel]
        D = cdist(sub, sub)
        i, j = np.unravel_index(int(np.argmax(D)), D.shape)
        if i > j:
            i, j = j, i
        without_i = [sel[a] for a in range(len(sel)) if a != i]
        without_j = [sel[a] for a in range(len(sel)) if a != j]
        di = diameter(pts, without_i)
        dj = diameter(pts, without_j)
        if di < dj:
            sel = without_i
        else:
            # ties drop the larger index (sel is sorted, so position j)
            sel = without_j
    return sel


def solve_min_diameter(P: PointSet, k_target: int, cfg: ApproxConfig) -> Solution:
    """Near-minimum-diameter subset of exactly k_target points.

    Scans the sorted pairwise distances as candidate targets, running
    solve_max_points at each until one yields at least k_target points, then
    truncates to exactly k_target. The result's diameter is at most
    (sqrt(2) + epsilon) times the optimal diameter over k_target-subsets,
    plus 2 * cfg.tol.
    """
    n = len(P)
    if n == 0:
        raise ValueError("point set is empty")
    if not 1 <= k_target <= n:
        raise PreconditionError(f"k_target must be between 1 and {n}, got {k_target}")
    radii = [0.0] if k_target == 1 else []
    if n > 1:
        radii.extend(float(v) for v in np.unique(pdist(P.coords)))
    for rc in radii:
        sol = solve_max_points(P, rc, cfg)
        if sol.size >= k_target:
            keep = _greedy_truncate(P.coords, list(sol.indices), k_target)
            return Solution(
                indices=tuple(keep),
                achieved_diameter=diameter(P, keep),
                ball=sol.ball,
                provenance=sol.provenance,
                early_stop=sol.early_stop,
                k_used=sol.k_used,
                candidates_examined=sol.candidates_examined,
            )
    raise AssertionError("unreachable: the largest pairwise distance covers the whole set")


def trivial_two_approx(P: PointSet, r: float, tol: float = 0.0) -> Solution:
    """Baseline: the ball of radius r about an input point covering the most
    points. Size is at least the optimum; diameter is at most 2r."""
    n = len(P)
    if n == 0:
        raise ValueError("point set is empty")
    if r < 0:
        raise ValueError("r must be nonnegative")
    D = cdist(P.coords, P.coords)
    counts = (D <= r + tol).sum(axis=1)
    best = int(np.argmax(counts))
    ball = Ball(P.coords[best], float(r))
    sel = points_in_ball(P, ball, tol)
    return Solution(
        indices=tuple(int(i) for i in sel),
        achieved_diameter=diameter(P, sel),
        ball=ball,
        provenance=(best,),
        candidates_examined=n,
    )
