"""Subspaces of C^n and their projectors, orthogonal and oblique.

A subspace is carried by a matrix with orthonormal columns.  Equality and
inclusion are decided through projectors, which makes both tests independent
of the particular basis.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_TOL, Tolerances, as_matrix, fro, numerical_rank, svd
from .errors import NotComplementary, ShapeMismatch

_ORTHONORMAL_SLACK = 1e-8


@dataclass(frozen=True)
class Subspace:
    """A subspace of C^n held as an n-by-d orthonormal basis (d may be 0)."""

    ambient_dim: int
    basis: np.ndarray

    def __post_init__(self):
        n, d = self.basis.shape
        if n != self.ambient_dim or d > n:
            raise ShapeMismatch(
                f"basis {self.basis.shape} invalid for ambient dim {self.ambient_dim}"
            )
        if d:
            gram = self.basis.conj().T @ self.basis
            if fro(gram - np.eye(d)) > _ORTHONORMAL_SLACK:
                raise ValueError("basis columns are not orthonormal")

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def projector(self) -> np.ndarray:
        """Orthogonal projector onto the subspace (zero matrix when d = 0)."""
        return self.basis @ self.basis.conj().T

    def complement(self) -> "Subspace":
        """Orthogonal complement within the same ambient space."""
        n, d = self.basis.shape
        if d == 0:
            return Subspace(n, np.eye(n, dtype=np.complex128))
        U, _, _ = np.linalg.svd(self.basis, full_matrices=True)
        return Subspace(n, U[:, d:])

    def contains(self, other: "Subspace", tol: Tolerances | None = None) -> bool:
        """Whether ``other`` is included in this subspace."""
        tol = tol or DEFAULT_TOL
        if self.ambient_dim != other.ambient_dim:
            raise ShapeMismatch("subspaces live in different ambient spaces")
        P_small = other.projector()
        return fro(P_small - self.projector() @ P_small) < tol.residual_tol

    def equals(self, other: "Subspace", tol: Tolerances | None = None) -> bool:
        """Basis-independent equality: projector distance below tolerance."""
        tol = tol or DEFAULT_TOL
        if self.ambient_dim != other.ambient_dim:
            raise ShapeMismatch("subspaces live in different ambient spaces")
        return fro(self.projector() - other.projector()) < tol.residual_tol

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, np.eye(n, dtype=np.complex128))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, np.zeros((n, 0), dtype=np.complex128))


def range_of(a, tol: Tolerances | None = None) -> Subspace:
    """Column space of ``a`` with an orthonormal basis from the SVD.

    Accepts matrices with zero columns (empty generating set) and returns the
    zero subspace of the row dimension in that case.
    """
    M = np.asarray(a, dtype=np.complex128)
    if M.ndim != 2 or M.shape[0] == 0:
        raise ShapeMismatch(f"cannot take the range of shape {M.shape}")
    if M.shape[1] == 0:
        return Subspace.zero(M.shape[0])
    f = svd(M, tol)
    return Subspace(f.U.shape[0], f.U[:, : f.rank])


def nullspace_of(a, tol: Tolerances | None = None) -> Subspace:
    """Kernel {x : Ax = 0} with an orthonormal basis from the SVD."""
    f = svd(a, tol)
    n = f.V.shape[0]
    return Subspace(n, f.V[:, f.rank :])


def orthogonal_projector(M: Subspace) -> np.ndarray:
    """Hermitian idempotent projecting onto ``M``."""
    return M.projector()


def oblique_projector(M: Subspace, N: Subspace, tol: Tolerances | None = None) -> np.ndarray:
    """The idempotent with range ``M`` and nullspace ``N``.

    Solves [B_M B_N] Y = I and keeps the rows of Y that multiply B_M, which
    is the unique projector when M and N are complementary.

    Raises
    ------
    NotComplementary
        If dim M + dim N != n or the stacked basis is numerically singular.
    """
    tol = tol or DEFAULT_TOL
    if M.ambient_dim != N.ambient_dim:
        raise ShapeMismatch("subspaces live in different ambient spaces")
    n = M.ambient_dim
    if M.dim + N.dim != n:
        raise NotComplementary(f"dim {M.dim} + {N.dim} != ambient {n}")
    stacked = np.hstack([M.basis, N.basis])
    if numerical_rank(stacked, tol) < n:
        raise NotComplementary("stacked basis is numerically singular")
    try:
        Y = np.linalg.solve(stacked, np.eye(n, dtype=np.complex128))
    except np.linalg.LinAlgError as exc:
        raise NotComplementary("stacked basis is exactly singular") from exc
    return M.basis @ Y[: M.dim, :]


def is_direct_sum(M: Subspace, N: Subspace, tol: Tolerances | None = None) -> bool:
    """Whether M + N = C^n with M and N intersecting trivially."""
    if M.ambient_dim != N.ambient_dim:
        raise ShapeMismatch("subspaces live in different ambient spaces")
    n = M.ambient_dim
    if M.dim + N.dim != n:
        return False
    return numerical_rank(np.hstack([M.basis, N.basis]), tol) == n
