"""Classical generalized inverses: Moore-Penrose, inner family, Drazin,
group, and the outer inverse with prescribed range and nullspace."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_TOL,
    SvdFactorization,
    Tolerances,
    as_matrix,
    fro,
    matrix_index,
    numerical_rank,
    residual_ok,
    svd,
)
from .errors import IndexTooLarge, NotExistent, NotSquare, ShapeMismatch
from .subspaces import Subspace, is_direct_sum, oblique_projector, range_of


def pinv_from_svd(f: SvdFactorization) -> np.ndarray:
    """Assemble the pseudoinverse V diag(1/sigma) U* from a factorization."""
    r = f.rank
    n, m = f.V.shape[0], f.U.shape[0]
    if r == 0:
        return np.zeros((n, m), dtype=np.complex128)
    return (f.V[:, :r] / f.sigma[:r]) @ f.U[:, :r].conj().T


def moore_penrose(a, tol: Tolerances | None = None) -> np.ndarray:
    """The unique X with AXA=A, XAX=X, (AX)*=AX, (XA)*=XA.

    Computed by inverting the singular values above the rank cutoff; a zero
    matrix maps to the zero matrix of transposed shape.
    """
    return pinv_from_svd(svd(a, tol))


@dataclass(frozen=True)
class InnerInverseSampler:
    """Reproducible samples from the solution family of A G A = A.

    Each draw is ``base + Z - left_proj @ Z @ right_proj`` with Z filled by a
    counter-based generator keyed on (seed, draw), so draws are independent
    of evaluation order.
    """

    base: np.ndarray
    left_proj: np.ndarray
    right_proj: np.ndarray
    seed: int

    def sample(self, draw: int) -> np.ndarray:
        key = ((self.seed % (1 << 64)) << 64) | (draw % (1 << 64))
        rng = np.random.Generator(np.random.Philox(key=key))
        n, m = self.base.shape
        Z = rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))
        return self.base + Z - self.left_proj @ Z @ self.right_proj


def inner_inverse_sampler(a, seed: int = 0, tol: Tolerances | None = None) -> InnerInverseSampler:
    A = as_matrix(a)
    P = moore_penrose(A, tol)
    return InnerInverseSampler(base=P, left_proj=P @ A, right_proj=A @ P, seed=seed)


def sample_inner_inverse(sampler: InnerInverseSampler, draw: int) -> np.ndarray:
    return sampler.sample(draw)


def drazin(a, tol: Tolerances | None = None) -> np.ndarray:
    """The unique X with XAX=X, AX=XA, A^(k+1) X = A^k (k the index of A).

    Uses the closed form A^l (A^(2l+1))^+ A^l with l the index, on a
    norm-scaled copy so powers stay representable.
    """
    A = as_matrix(a)
    m, n = A.shape
    if m != n:
        raise NotSquare(f"Drazin inverse needs a square matrix, got {m}x{n}")
    tol = tol or DEFAULT_TOL
    scale = fro(A)
    if scale == 0.0:
        return np.zeros((n, n), dtype=np.complex128)
    B = A / scale
    l = matrix_index(A, tol)
    Bl = np.linalg.matrix_power(B, l)
    middle = moore_penrose(np.linalg.matrix_power(B, 2 * l + 1), tol)
    return (Bl @ middle @ Bl) / scale


def group_inverse(a, tol: Tolerances | None = None) -> np.ndarray:
    """Drazin inverse restricted to matrices of index at most 1."""
    A = as_matrix(a)
    if A.shape[0] != A.shape[1]:
        raise NotSquare(f"group inverse needs a square matrix, got {A.shape}")
    tol = tol or DEFAULT_TOL
    k = matrix_index(A, tol)
    if k > 1:
        raise IndexTooLarge(f"group inverse requires index <= 1, got index {k}")
    return drazin(A, tol)


def outer_prescribed(a, T: Subspace, S: Subspace, tol: Tolerances | None = None) -> np.ndarray:
    """Outer inverse of A with range T and nullspace S.

    Exists iff A(T) and S decompose the codomain as a direct sum; then
    X = B_T (W A B_T)^(-1) W with W* an orthonormal basis of the orthogonal
    complement of S.  The result is checked against XAX=X and the two
    projector identities XA = P over T along (A*(S-perp))-perp and
    AX = P over A(T) along S.

    Raises
    ------
    NotExistent
        If the direct-sum condition fails, dimensions are inadmissible, or
        the pairing matrix W A B_T is numerically singular.
    """
    A = as_matrix(a)
    tol = tol or DEFAULT_TOL
    m, n = A.shape
    if T.ambient_dim != n or S.ambient_dim != m:
        raise ShapeMismatch(
            f"T ambient {T.ambient_dim} must equal cols {n}, S ambient {S.ambient_dim} rows {m}"
        )
    s = T.dim
    rank_a = numerical_rank(A, tol)
    if s > rank_a or S.dim != m - s:
        raise NotExistent(
            f"inadmissible dimensions: dim T = {s} (rank A = {rank_a}), "
            f"dim S = {S.dim} (must be {m - s})"
        )
    image = range_of(A @ T.basis, tol)
    if not is_direct_sum(image, S, tol):
        raise NotExistent("A(T) and S do not span the codomain as a direct sum")
    S_perp = S.complement()
    W = S_perp.basis.conj().T
    if s == 0:
        X = np.zeros((n, m), dtype=np.complex128)
    else:
        pairing = W @ A @ T.basis
        if numerical_rank(pairing, tol) < s:
            raise NotExistent("pairing matrix W A B_T is numerically singular")
        X = T.basis @ np.linalg.solve(pairing, W)

    t = tol.residual_tol
    if not residual_ok(fro(X @ A @ X - X), max(fro(X), fro(A)), t):
        raise NotExistent("computed candidate fails XAX = X beyond tolerance")
    left_target = oblique_projector(
        T, range_of(A.conj().T @ S_perp.basis, tol).complement(), tol
    )
    right_target = oblique_projector(image, S, tol)
    if not residual_ok(fro(X @ A - left_target), fro(left_target), t):
        raise NotExistent("computed candidate fails the XA projector identity")
    if not residual_ok(fro(A @ X - right_target), fro(right_target), t):
        raise NotExistent("computed candidate fails the AX projector identity")
    return X
