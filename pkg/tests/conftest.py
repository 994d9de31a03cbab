"""Shared builders: seeded random matrices with prescribed rank or index,
valid projector-pair triples, and the worked examples used across tests."""
import numpy as np
import pytest

from efinv import nullspace_of, outer_prescribed, range_of


def rng_for(seed):
    return np.random.default_rng(seed)


def random_unitary(rng, n):
    M = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    Q, R = np.linalg.qr(M)
    d = np.diag(R)
    return Q * (d / np.abs(d))


def random_rank(rng, m, n, r, smin=0.5, smax=2.0):
    """Random m-by-n complex matrix of exact rank r with singular values
    in [smin, smax] (well conditioned by construction)."""
    if r == 0:
        return np.zeros((m, n), dtype=np.complex128)
    U = random_unitary(rng, m)
    V = random_unitary(rng, n)
    s = np.sort(rng.uniform(smin, smax, r))[::-1]
    return (U[:, :r] * s) @ V[:, :r].conj().T


def random_index(rng, n, k, core_rank=None):
    """Random n-by-n matrix of exact index k, with its Drazin inverse.

    Built as a unitary similarity of blockdiag(C, N) where C is invertible
    of size core_rank and N is nilpotent of nilpotency index k.
    """
    if k == 0:
        A = random_rank(rng, n, n, n)
        return A, np.linalg.inv(A)
    if core_rank is None:
        core_rank = n - k
    assert 1 <= core_rank <= n - k
    C = random_unitary(rng, core_rank) @ np.diag(rng.uniform(0.6, 1.8, core_rank))
    nil = n - core_rank
    N = np.zeros((nil, nil), dtype=np.complex128)
    for i in range(k - 1):
        N[i, i + 1] = 1.0
    D = np.block([
        [C, np.zeros((core_rank, nil))],
        [np.zeros((nil, core_rank)), N],
    ])
    Dd = np.block([
        [np.linalg.inv(C), np.zeros((core_rank, nil))],
        [np.zeros((nil, core_rank)), np.zeros((nil, nil))],
    ])
    Q = random_unitary(rng, n)
    return Q @ D @ Q.conj().T, Q @ Dd @ Q.conj().T


def random_valid_triple(rng, m, n, r, s):
    """(A, E, F, X): a rank-r matrix with a valid projector pair built from
    the outer inverse with range T inside range(A*) and a generic
    complementary nullspace."""
    A = random_rank(rng, m, n, r)
    gen_t = A.conj().T @ (rng.standard_normal((m, s)) + 1j * rng.standard_normal((m, s)))
    T = range_of(gen_t)
    assert T.dim == s
    gen_s = rng.standard_normal((m, m - s)) + 1j * rng.standard_normal((m, m - s))
    S = range_of(gen_s)
    assert S.dim == m - s
    X = outer_prescribed(A, T, S)
    return A, X @ A, A @ X, X


def example1(a=2.0):
    """4x3 double-scaled partial identity with averaging projectors."""
    A = np.zeros((4, 3))
    A[0, 0] = a
    A[1, 1] = a
    E = np.zeros((3, 3))
    E[:2, :2] = 0.5
    F = np.zeros((4, 4))
    F[:2, :2] = 0.5
    X = np.zeros((3, 4))
    X[:2, :2] = 1.0 / (2.0 * a)
    return A, E, F, X


def example2(a=2.0, b=4.0):
    """3x3 diagonal with rank-1 non-orthogonal projectors."""
    A = np.diag([a, b, 0.0])
    E = np.zeros((3, 3))
    E[0, 0] = 1.0
    E[0, 1] = 1.0
    F = np.zeros((3, 3))
    F[0, 0] = 1.0
    F[0, 1] = a / b
    X = np.zeros((3, 3))
    X[0, 0] = 1.0 / a
    X[0, 1] = 1.0 / b
    return A, E, F, X


def example3(a=2.0, b=3.0, c=5.0):
    """4x3 diagonal with lower-triangular rank-1 projectors."""
    A = np.zeros((4, 3))
    A[0, 0] = a
    A[1, 1] = b
    E = np.zeros((3, 3))
    E[0, 0] = 1.0
    E[1, 0] = c
    F = np.zeros((4, 4))
    F[0, 0] = 1.0
    F[1, 0] = b * c / a
    X = np.zeros((3, 4))
    X[0, 0] = 1.0 / a
    X[1, 0] = c / a
    return A, E, F, X


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
