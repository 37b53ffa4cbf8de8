"""Dense symmetric linear algebra kernels: cyclic Jacobi eigenvalues and a
positive-definite triangular factorization with an explicit pivot floor."""

import numpy as np

from .errors import ConvergenceError, NotPositiveDefinite

_MAX_SWEEPS = 100


def check_symmetric(M) -> np.ndarray:
    """Validate and return a square symmetric float matrix."""
    A = np.asarray(M, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("matrix must be square")
    if A.size and not np.all(np.isfinite(A)):
        raise ValueError("matrix entries must be finite")
    scale = max(1.0, float(np.abs(A).max())) if A.size else 1.0
    if A.size and float(np.abs(A - A.T).max()) > 1e-12 * scale:
        raise ValueError("matrix must be symmetric")
    return 0.5 * (A + A.T)


def _off_norm(A: np.ndarray) -> float:
    return float(np.sqrt(max(np.sum(A * A) - np.sum(np.diag(A) ** 2), 0.0)))


def jacobi_eigenvalues(M, off_tol: float | None = None, max_sweeps: int = _MAX_SWEEPS) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi
    rotations driven until the off-diagonal Frobenius norm drops below off_tol."""
    A = check_symmetric(M).copy()
    n = A.shape[0]
    if n == 0:
        return np.empty(0)
    if off_tol is None:
        off_tol = 1e-12 * max(1.0, float(np.linalg.norm(A)))
    skip = off_tol / max(1, n * n)
    for _ in range(max_sweeps):
        if _off_norm(A) <= off_tol:
            return np.sort(np.diag(A))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= skip:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                if theta == 0.0:
                    t = 1.0
                else:
                    t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                col_p = A[:, p].copy()
                col_q = A[:, q].copy()
                A[:, p] = c * col_p - s * col_q
                A[:, q] = s * col_p + c * col_q
                row_p = A[p, :].copy()
                row_q = A[q, :].copy()
                A[p, :] = c * row_p - s * row_q
                A[q, :] = s * row_p + c * row_q
                A[p, q] = 0.0
                A[q, p] = 0.0
    if _off_norm(A) <= off_tol:
        return np.sort(np.diag(A))
    raise ConvergenceError(
        f"Jacobi sweep cap {max_sweeps} reached with off-diagonal norm {_off_norm(A):.3e}"
    )


def min_eigenvalue(M, tol: float = 1e-9) -> float:
    """Smallest eigenvalue of a symmetric matrix, accurate to well within tol."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    A = check_symmetric(M)
    if A.shape[0] == 0:
        raise ValueError("empty matrix has no eigenvalues")
    off_tol = min(tol, 1e-12 * max(1.0, float(np.linalg.norm(A))))
    return float(jacobi_eigenvalues(A, off_tol=off_tol)[0])


def psd_factor(Q) -> np.ndarray:
    """Upper-triangular U with U^T U = Q for symmetric positive definite Q.

    Pivots at or below 1e-12 times the largest diagonal entry raise
    NotPositiveDefinite, signaling that the eigenvalue precondition failed.
    """
    A = check_symmetric(Q)
    n = A.shape[0]
    if n == 0:
        return np.empty((0, 0))
    L = np.zeros_like(A)
    floor = 1e-12 * float(A.diagonal().max())
    for j in range(n):
        d = A[j, j] - L[j, :j] @ L[j, :j]
        if d <= floor or d <= 0.0:
            raise NotPositiveDefinite(f"pivot {j} is {d:.3e} (floor {floor:.3e})")
        L[j, j] = np.sqrt(d)
        if j + 1 < n:
            L[j + 1 :, j] = (A[j + 1 :, j] - L[j + 1 :, :j] @ L[j, :j]) / L[j, j]
    return L.T
