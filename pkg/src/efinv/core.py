"""Dense complex-matrix substrate: validation, SVD, numerical rank, index.

Matrices are plain ``numpy.ndarray`` values in complex128.  Every function
is pure; nothing here mutates its arguments.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import FactorizationFailure, NotSquare, ShapeMismatch

EPS = float(np.finfo(np.float64).eps)


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a nonempty 2-D complex128 array with finite entries."""
    M = np.asarray(a, dtype=np.complex128)
    if M.ndim != 2:
        raise ShapeMismatch(f"expected a 2-D matrix, got ndim={M.ndim}")
    if M.size == 0:
        raise ShapeMismatch(f"matrix must be nonempty, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix entries must be finite (no NaN/Inf)")
    return M


def fro(a) -> float:
    """Frobenius norm as a Python float."""
    return float(np.linalg.norm(a))


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds for rank, residual, and idempotency decisions.

    ``rank_rel_tol=None`` selects the standard shape-dependent cutoff
    ``max(m, n) * eps`` relative to the largest singular value.  Residual
    acceptance everywhere compares against ``residual_tol`` scaled by
    ``max(1, norm of the reference operand)`` so decisions are scale-free.
    """

    rank_rel_tol: float | None = None
    residual_tol: float = 1e-10
    idempotency_tol: float = 1e-10

    def __post_init__(self):
        for name in ("rank_rel_tol", "residual_tol", "idempotency_tol"):
            value = getattr(self, name)
            if value is not None and not value >= 0:
                raise ValueError(f"{name} must be nonnegative, got {value}")

    def rank_cutoff(self, shape, sigma_max: float) -> float:
        rel = self.rank_rel_tol if self.rank_rel_tol is not None else max(shape) * EPS
        return rel * sigma_max


DEFAULT_TOL = Tolerances()


@dataclass(frozen=True)
class SvdFactorization:
    """Full SVD ``A = U @ diag(sigma) @ V.conj().T`` plus the numerical rank.

    ``U`` is m-by-m unitary, ``V`` n-by-n unitary, ``sigma`` the nonincreasing
    singular values (length min(m, n)), and ``rank`` the count of singular
    values above the relative cutoff.
    """

    U: np.ndarray
    sigma: np.ndarray
    V: np.ndarray
    rank: int

    def reconstruct(self) -> np.ndarray:
        m, n = self.U.shape[0], self.V.shape[0]
        S = np.zeros((m, n))
        np.fill_diagonal(S, self.sigma)
        return self.U @ S @ self.V.conj().T


def svd(a, tol: Tolerances | None = None) -> SvdFactorization:
    """Singular value decomposition with a relative rank cutoff.

    Rank counts the singular values strictly above
    ``rank_cutoff = rank_rel_tol * sigma_1``; a zero matrix gets rank 0.

    Raises
    ------
    FactorizationFailure
        If the iterative decomposition does not converge.
    """
    A = as_matrix(a)
    tol = tol or DEFAULT_TOL
    try:
        U, s, Vh = np.linalg.svd(A, full_matrices=True)
    except np.linalg.LinAlgError as exc:
        raise FactorizationFailure(f"SVD did not converge for shape {A.shape}") from exc
    sigma_max = float(s[0]) if s.size else 0.0
    rank = int(np.count_nonzero(s > tol.rank_cutoff(A.shape, sigma_max)))
    return SvdFactorization(U=U, sigma=s, V=Vh.conj().T, rank=rank)


def numerical_rank(a, tol: Tolerances | None = None) -> int:
    """Number of singular values above the relative cutoff."""
    return svd(a, tol).rank


def matrix_index(a, tol: Tolerances | None = None) -> int:
    """Smallest k >= 0 with rank(A^k) == rank(A^(k+1)); always <= n.

    A^0 is the identity, so invertible matrices have index 0.  Powers are
    renormalized to unit Frobenius norm before each rank evaluation; rank is
    scale invariant, so this only guards against over/underflow.
    """
    A = as_matrix(a)
    m, n = A.shape
    if m != n:
        raise NotSquare(f"matrix index needs a square matrix, got {m}x{n}")
    tol = tol or DEFAULT_TOL
    scale = np.linalg.norm(A)
    if scale == 0.0:
        return 1
    B = A / scale
    prev_rank = n
    power = np.eye(n, dtype=np.complex128)
    for k in range(n + 1):
        power = power @ B
        pnorm = np.linalg.norm(power)
        if pnorm > 0.0:
            power = power / pnorm
            r = numerical_rank(power, tol)
        else:
            r = 0
        if r == prev_rank:
            return k
        prev_rank = r
    return n


def frobenius_distance(x, y) -> float:
    """``||X - Y||_F``; zero iff the matrices are equal."""
    X = as_matrix(x)
    Y = as_matrix(y)
    if X.shape != Y.shape:
        raise ShapeMismatch(f"shape {X.shape} vs {Y.shape}")
    return fro(X - Y)


def residual_ok(residual: float, ref_norm: float, tol_value: float) -> bool:
    """Scale-free acceptance: residual < tol * max(1, ref_norm)."""
    return residual < tol_value * max(1.0, ref_norm)
