"""Exact Euclidean primitives: distances, diameters, balls, and disc graphs."""

import json

import numpy as np
from scipy.spatial.distance import cdist, pdist

from .graphs import Graph


def dist(p, q) -> float:
    """Euclidean distance between two points of equal dimension."""
    a = np.asarray(p, dtype=float)
    b = np.asarray(q, dtype=float)
    if a.ndim != 1 or a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return float(np.linalg.norm(a - b))


class PointSet:
    """Ordered finite set of points in R^dim; indices are stable identifiers.

    Coordinates are stored as a read-only float64 array, so instances are
    safe to share across concurrent workers.
    """

    def __init__(self, points, dim: int | None = None):
        arr = np.asarray(points, dtype=float)
        if arr.size == 0:
            if dim is None:
                raise ValueError("an empty point set needs an explicit dim")
            arr = arr.reshape(0, dim)
        if arr.ndim != 2:
            raise ValueError("points must form an (n, dim) array")
        if dim is not None and arr.shape[1] != dim:
            raise ValueError(f"expected dimension {dim}, got {arr.shape[1]}")
        if arr.shape[1] < 1:
            raise ValueError("dimension must be at least 1")
        if not np.all(np.isfinite(arr)):
            raise ValueError("coordinates must be finite")
        arr = arr.copy()
        arr.setflags(write=False)
        self._coords = arr

    @property
    def coords(self) -> np.ndarray:
        return self._coords

    @property
    def dim(self) -> int:
        return self._coords.shape[1]

    def __len__(self) -> int:
        return self._coords.shape[0]

    def __getitem__(self, i: int) -> np.ndarray:
        return self._coords[i]

    def subset(self, indices) -> "PointSet":
        return PointSet(self._coords[list(indices)], dim=self.dim)

    def __repr__(self) -> str:
        return f"PointSet(n={len(self)}, dim={self.dim})"


class Ball:
    """Closed ball: a center point plus a nonnegative radius."""

    __slots__ = ("center", "radius")

    def __init__(self, center, radius: float):
        c = np.asarray(center, dtype=float)
        if c.ndim != 1:
            raise ValueError("center must be a single point")
        if not np.all(np.isfinite(c)):
            raise ValueError("center must be finite")
        radius = float(radius)
        if not radius >= 0.0:
            raise ValueError("radius must be nonnegative")
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "center", c)
        object.__setattr__(self, "radius", radius)

    def __setattr__(self, name, value):
        raise AttributeError("Ball is immutable")

    def __repr__(self) -> str:
        return f"Ball(center={self.center.tolist()}, radius={self.radius})"


def _coords_of(points) -> np.ndarray:
    if isinstance(points, PointSet):
        return points.coords
    return np.asarray(points, dtype=float)


def diameter(points, indices=None) -> float:
    """Maximum pairwise distance; 0 for empty or singleton sets."""
    P = _coords_of(points)
    if indices is not None:
        P = P[np.asarray(list(indices), dtype=int)]
    if len(P) <= 1:
        return 0.0
    return float(pdist(P).max())


def points_in_ball(P: PointSet, b: Ball, tol: float = 1e-9) -> np.ndarray:
    """Indices of all points within b.radius + tol of b.center, ascending."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    if P.dim != b.center.shape[0]:
        raise ValueError(f"dimension mismatch: points {P.dim}, ball {b.center.shape[0]}")
    if len(P) == 0:
        return np.empty(0, dtype=int)
    d = np.linalg.norm(P.coords - b.center, axis=1)
    return np.flatnonzero(d <= b.radius + tol)


def disc_graph(P: PointSet, r: float) -> Graph:
    """Graph on the point indices with an edge where distance <= r.

    A subset of P has diameter <= r exactly when its index set is a clique.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    n = len(P)
    if n <= 1:
        return Graph(n, frozenset())
    D = cdist(P.coords, P.coords)
    iu, ju = np.triu_indices(n, 1)
    mask = D[iu, ju] <= r
    edges = frozenset((int(u), int(v)) for u, v in zip(iu[mask], ju[mask]))
    return Graph(n, edges)


def parse_pointset(obj) -> PointSet:
    """Validate the canonical JSON object {"dim": d, "points": [[...], ...]}.

    Ragged rows and non-finite values are rejected; unknown keys are ignored.
    """
    if not isinstance(obj, dict):
        raise ValueError("point set file must hold a JSON object")
    dim = obj.get("dim")
    points = obj.get("points")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ValueError('"dim" must be a positive integer')
    if not isinstance(points, list):
        raise ValueError('"points" must be a list of coordinate rows')
    rows = []
    for i, row in enumerate(points):
        if not isinstance(row, (list, tuple)) or len(row) != dim:
            raise ValueError(f"row {i} must have exactly {dim} coordinates")
        coords = []
        for c in row:
            if isinstance(c, bool) or not isinstance(c, (int, float)):
                raise ValueError(f"row {i} holds a non-numeric coordinate")
            coords.append(float(c))
        rows.append(coords)
    return PointSet(rows, dim=dim)


def pointset_to_obj(P: PointSet) -> dict:
    return {"dim": P.dim, "points": [list(row) for row in P.coords.tolist()]}


def load_pointset(path) -> PointSet:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as e:
            raise ValueError(f"{path}: invalid JSON ({e})") from None
    try:
        return parse_pointset(obj)
    except ValueError as e:
        raise ValueError(f"{path}: {e}") from None


def save_pointset(P: PointSet, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(pointset_to_obj(P), fh)
        fh.write("\n")
