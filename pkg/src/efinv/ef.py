"""Inverses prescribed by a projector pair: the unique X with

    XAX = X,   XA = E,   AX = F.

This module decides existence, computes the inverse as E A+ F, certifies
candidates by their residuals, assembles the SVD block canonical form, and
provides the bridges to the constrained inverse built from a (B, C) pair,
the inverse along a single matrix D, and the bilateral composition of an
outer with an inner inverse.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_TOL,
    Tolerances,
    as_matrix,
    fro,
    numerical_rank,
    residual_ok,
    svd,
)
from .errors import (
    BadParams,
    NotExistent,
    NotInner,
    NotOuter,
    ShapeMismatch,
)
from .classical import drazin, moore_penrose, pinv_from_svd
from .subspaces import is_direct_sum, nullspace_of, oblique_projector, range_of

_CHECK_LABELS = ("E_idem", "F_idem", "commute", "left", "right")


@dataclass(frozen=True)
class ExistenceReport:
    """Residual evidence for whether the prescribed inverse exists.

    ``checks`` holds the five residuals of the algebraic criterion
    (idempotency of E and F, AE = FA, E A+A = E, AA+ F = F); ``details``
    holds one verdict per characterization clause, all of which must agree
    on clean data.  ``exists`` is the verdict of the evaluated clause.
    """

    exists: bool
    checks: dict
    failed_checks: tuple
    witness_path: str
    details: dict


@dataclass(frozen=True)
class Certificate:
    """Residuals of the three defining equations for a candidate X.

    ``threshold`` is the acceptance level actually used:
    residual_tol * max(1, ||X||_F, ||A||_F).
    """

    outer_residual: float
    left_residual: float
    right_residual: float
    threshold: float
    passed: bool


def _check_shapes(A, E, F):
    m, n = A.shape
    if E.shape != (n, n):
        raise ShapeMismatch(f"E must be {n}x{n} for A {m}x{n}, got {E.shape}")
    if F.shape != (m, m):
        raise ShapeMismatch(f"F must be {m}x{m} for A {m}x{n}, got {F.shape}")


def ef_exists(a, e, f, tol: Tolerances | None = None) -> ExistenceReport:
    """Decide existence of the inverse prescribed by (E, F).

    The primary decision evaluates the five-equation criterion with the
    Moore-Penrose inverse standing in for an arbitrary inner inverse (any
    member of the inner family gives the same verdict).  The report also
    evaluates the three equivalent subspace characterizations so callers
    can cross-check that all clauses agree.
    """
    A, E, F = as_matrix(a), as_matrix(e), as_matrix(f)
    tol = tol or DEFAULT_TOL
    _check_shapes(A, E, F)
    m, n = A.shape
    fac = svd(A, tol)
    P = pinv_from_svd(fac)
    t = tol.residual_tol

    residuals = {
        "E_idem": fro(E @ E - E),
        "F_idem": fro(F @ F - F),
        "commute": fro(A @ E - F @ A),
        "left": fro(E @ P @ A - E),
        "right": fro(A @ P @ F - F),
    }
    scales = {
        "E_idem": fro(E),
        "F_idem": fro(F),
        "commute": fro(A @ E),
        "left": fro(E),
        "right": fro(F),
    }
    ok = {k: residual_ok(residuals[k], scales[k], t) for k in _CHECK_LABELS}
    clause_b = all(ok.values())
    shared = ok["E_idem"] and ok["F_idem"] and ok["commute"]

    null_A = nullspace_of(A, tol)
    null_E = nullspace_of(E, tol)
    range_A = range_of(A, tol)
    range_F = range_of(F, tol)
    range_ok = range_A.contains(range_F, tol)
    clause_c = shared and null_E.contains(null_A, tol) and range_ok
    clause_d = (
        shared
        and range_of(A.conj().T, tol).contains(range_of(E.conj().T, tol), tol)
        and range_ok
    )

    T_E = range_of(E, tol)
    S_F = nullspace_of(F, tol)
    outer_exists = (
        T_E.dim <= fac.rank
        and S_F.dim == m - T_E.dim
        and is_direct_sum(range_of(A @ T_E.basis, tol), S_F, tol)
    )
    clause_e = (
        outer_exists
        and nullspace_of(F @ A, tol).equals(null_E, tol)
        and range_of(A @ E, tol).equals(range_F, tol)
    )

    return ExistenceReport(
        exists=clause_b,
        checks=residuals,
        failed_checks=tuple(k for k in _CHECK_LABELS if not ok[k]),
        witness_path="b",
        details={"b": clause_b, "c": clause_c, "d": clause_d, "e": clause_e},
    )


def ef_inverse(a, e, f, tol: Tolerances | None = None) -> np.ndarray:
    """Compute the inverse prescribed by (E, F) as E A+ F.

    Raises
    ------
    NotExistent
        If the existence criterion fails; the report travels on the error.
    """
    A, E, F = as_matrix(a), as_matrix(e), as_matrix(f)
    tol = tol or DEFAULT_TOL
    report = ef_exists(A, E, F, tol)
    if not report.exists:
        raise NotExistent(
            f"no solution of XAX=X, XA=E, AX=F (failed checks: {report.failed_checks})",
            report=report,
        )
    return E @ moore_penrose(A, tol) @ F


def ef_verify(a, e, f, x, tol: Tolerances | None = None) -> Certificate:
    """Residuals of XAX=X, XA=E, AX=F for a candidate X; pure report."""
    A, E, F, X = as_matrix(a), as_matrix(e), as_matrix(f), as_matrix(x)
    tol = tol or DEFAULT_TOL
    _check_shapes(A, E, F)
    m, n = A.shape
    if X.shape != (n, m):
        raise ShapeMismatch(f"X must be {n}x{m}, got {X.shape}")
    outer = fro(X @ A @ X - X)
    left = fro(X @ A - E)
    right = fro(A @ X - F)
    threshold = tol.residual_tol * max(1.0, fro(X), fro(A))
    return Certificate(
        outer_residual=outer,
        left_residual=left,
        right_residual=right,
        threshold=threshold,
        passed=outer < threshold and left < threshold and right < threshold,
    )


def ef_from_outer_pair(a, e, f, tol: Tolerances | None = None):
    """The factor pair (X1, X2) = (A+ F, E A+), both outer inverses of A.

    E X1 and X2 F both reproduce the prescribed inverse.
    """
    A, E, F = as_matrix(a), as_matrix(e), as_matrix(f)
    tol = tol or DEFAULT_TOL
    report = ef_exists(A, E, F, tol)
    if not report.exists:
        raise NotExistent(
            f"no solution of XAX=X, XA=E, AX=F (failed checks: {report.failed_checks})",
            report=report,
        )
    P = moore_penrose(A, tol)
    return P @ F, E @ P


_BLOCK_CONDITIONS = (
    "E1_idem",
    "F1_idem",
    "sigma_intertwine",
    "E3_E1",
    "F1_F2",
    "E2_zero",
    "E4_zero",
    "F3_zero",
    "F4_zero",
)


def ef_canonical_form(a, e, f, tol: Tolerances | None = None) -> np.ndarray:
    """Assemble the inverse from SVD block coordinates.

    With A = U [Sigma 0; 0 0] V*, transform E into V-coordinates and F into
    U-coordinates, split both at the rank, and validate the nine block
    conditions (E1, F1 idempotent; Sigma E1 = F1 Sigma; E3 E1 = E3;
    F1 F2 = F2; E2 = E4 = F3 = F4 = 0).  When they hold the inverse is

        V [E1 S^-1, E1 S^-1 F2; E3 S^-1, E3 S^-1 F2] U*.

    Raises
    ------
    NotExistent
        Listing the violated block conditions.
    """
    A, E, F = as_matrix(a), as_matrix(e), as_matrix(f)
    tol = tol or DEFAULT_TOL
    _check_shapes(A, E, F)
    fac = svd(A, tol)
    r = fac.rank
    U, V = fac.U, fac.V
    Et = V.conj().T @ E @ V
    Ft = U.conj().T @ F @ U
    E1, E2, E3, E4 = Et[:r, :r], Et[:r, r:], Et[r:, :r], Et[r:, r:]
    F1, F2, F3, F4 = Ft[:r, :r], Ft[:r, r:], Ft[r:, :r], Ft[r:, r:]
    sigma = fac.sigma[:r]

    t = tol.residual_tol
    conditions = {
        "E1_idem": (fro(E1 @ E1 - E1), fro(E1)),
        "F1_idem": (fro(F1 @ F1 - F1), fro(F1)),
        "sigma_intertwine": (fro(sigma[:, None] * E1 - F1 * sigma[None, :]), fro(sigma[:, None] * E1)),
        "E3_E1": (fro(E3 @ E1 - E3), fro(E3)),
        "F1_F2": (fro(F1 @ F2 - F2), fro(F2)),
        "E2_zero": (fro(E2), fro(E)),
        "E4_zero": (fro(E4), fro(E)),
        "F3_zero": (fro(F3), fro(F)),
        "F4_zero": (fro(F4), fro(F)),
    }
    violated = [
        name
        for name in _BLOCK_CONDITIONS
        if not residual_ok(*conditions[name], t)
    ]
    if violated:
        raise NotExistent(
            f"block conditions violated: {', '.join(violated)}", violated=violated
        )
    E1_div = E1 / sigma[None, :] if r else E1
    E3_div = E3 / sigma[None, :] if r else E3
    core = np.block([[E1_div, E1_div @ F2], [E3_div, E3_div @ F2]])
    return V @ core @ U.conj().T


def crcr_inverse(a, b, c, tol: Tolerances | None = None) -> np.ndarray:
    """Constrained inverse B (C A B)+ C for square A, B, C.

    Exists iff rank(CAB) = rank(B) = rank(C); the result then satisfies
    XAB = B, CAX = C with range inside range(B) and corange inside
    range(C*).
    """
    A, B, C = as_matrix(a), as_matrix(b), as_matrix(c)
    tol = tol or DEFAULT_TOL
    n = A.shape[0]
    if A.shape != (n, n) or B.shape != (n, n) or C.shape != (n, n):
        raise ShapeMismatch(
            f"expected square matrices of one size, got {A.shape}, {B.shape}, {C.shape}"
        )
    rank_b = numerical_rank(B, tol)
    rank_c = numerical_rank(C, tol)
    CAB = C @ A @ B
    rank_cab = numerical_rank(CAB, tol)
    if not (rank_cab == rank_b == rank_c):
        raise NotExistent(
            f"rank condition fails: rank(CAB)={rank_cab}, rank(B)={rank_b}, rank(C)={rank_c}",
            ranks=(rank_cab, rank_b, rank_c),
        )
    X = B @ moore_penrose(CAB, tol) @ C
    t = tol.residual_tol
    checks = (
        residual_ok(fro(X @ A @ B - B), fro(B), t)
        and residual_ok(fro(C @ A @ X - C), fro(C), t)
        and range_of(B, tol).contains(range_of(X, tol), tol)
        and range_of(C.conj().T, tol).contains(range_of(X.conj().T, tol), tol)
    )
    if not checks:
        raise NotExistent(
            "rank condition holds but the defining equations fail beyond tolerance",
            ranks=(rank_cab, rank_b, rank_c),
        )
    return X


def bc_to_ef(a, b, c, tol: Tolerances | None = None):
    """Projector pair (E, F) whose prescribed inverse equals the (B, C) one.

    E projects onto range(B) along null(CA); F projects onto range(AB)
    along null(C).
    """
    A, B, C = as_matrix(a), as_matrix(b), as_matrix(c)
    tol = tol or DEFAULT_TOL
    rank_b = numerical_rank(B, tol)
    rank_c = numerical_rank(C, tol)
    rank_cab = numerical_rank(C @ A @ B, tol)
    if not (rank_cab == rank_b == rank_c):
        raise NotExistent(
            f"rank condition fails: rank(CAB)={rank_cab}, rank(B)={rank_b}, rank(C)={rank_c}",
            ranks=(rank_cab, rank_b, rank_c),
        )
    E = oblique_projector(range_of(B, tol), nullspace_of(C @ A, tol), tol)
    F = oblique_projector(range_of(A @ B, tol), nullspace_of(C, tol), tol)
    return E, F


def mary_inverse(a, d, tol: Tolerances | None = None) -> np.ndarray:
    """Inverse along the single matrix D: the (D, D)-constrained inverse.

    Additionally satisfies XAD = D = DAX.
    """
    A, D = as_matrix(a), as_matrix(d)
    tol = tol or DEFAULT_TOL
    X = crcr_inverse(A, D, D, tol)
    t = tol.residual_tol
    if not (
        residual_ok(fro(X @ A @ D - D), fro(D), t)
        and residual_ok(fro(D @ A @ X - D), fro(D), t)
    ):
        raise NotExistent("candidate fails XAD = D = DAX beyond tolerance")
    return X


def ef_is_inner(a, e, f, tol: Tolerances | None = None):
    """Whether the prescribed inverse also satisfies A X A = A.

    Evaluates five equivalent clauses ((a) AXA=A, (b) A=AE, (c) A=FA,
    (d) range(A) inside range(F), (e) null(E) inside null(A)) and returns
    the common verdict with the per-clause map.  The clauses agree on every
    valid input; a disagreement indicates numerics at the tolerance edge.
    """
    A, E, F = as_matrix(a), as_matrix(e), as_matrix(f)
    tol = tol or DEFAULT_TOL
    report = ef_exists(A, E, F, tol)
    if not report.exists:
        raise NotExistent(
            f"no solution of XAX=X, XA=E, AX=F (failed checks: {report.failed_checks})",
            report=report,
        )
    X = E @ moore_penrose(A, tol) @ F
    t = tol.residual_tol
    norm_a = fro(A)
    clauses = {
        "a": residual_ok(fro(A @ X @ A - A), norm_a, t),
        "b": residual_ok(fro(A - A @ E), norm_a, t),
        "c": residual_ok(fro(A - F @ A), norm_a, t),
        "d": range_of(F, tol).contains(range_of(A, tol), tol),
        "e": nullspace_of(A, tol).contains(nullspace_of(E, tol), tol),
    }
    verdicts = set(clauses.values())
    if len(verdicts) > 1:
        raise RuntimeError(f"inner-inverse clauses disagree: {clauses}")
    return verdicts.pop(), clauses


def bilateral_inverse(a, x1, x2, order: str, tol: Tolerances | None = None):
    """Compose an outer inverse X1 and an inner inverse X2 of A.

    order="outer-first" gives X = X1 A X2 with E = X1 A, F = A X1 A X2;
    order="inner-first" gives X = X2 A X1 with E = X2 A X1 A, F = A X1.
    Either composition is the inverse prescribed by its (E, F).

    Returns (X, E, F).
    """
    A, X1, X2 = as_matrix(a), as_matrix(x1), as_matrix(x2)
    tol = tol or DEFAULT_TOL
    m, n = A.shape
    if X1.shape != (n, m) or X2.shape != (n, m):
        raise ShapeMismatch(f"X1 and X2 must be {n}x{m}, got {X1.shape}, {X2.shape}")
    if order not in ("outer-first", "inner-first"):
        raise BadParams(f"order must be 'outer-first' or 'inner-first', got {order!r}")
    t = tol.residual_tol
    if not residual_ok(fro(X1 @ A @ X1 - X1), fro(X1), t):
        raise NotOuter("X1 fails X1 A X1 = X1 beyond tolerance")
    if not residual_ok(fro(A @ X2 @ A - A), fro(A), t):
        raise NotInner("X2 fails A X2 A = A beyond tolerance")
    if order == "outer-first":
        X = X1 @ A @ X2
        E = X1 @ A
        F = A @ X
    else:
        X = X2 @ A @ X1
        E = X @ A
        F = A @ X1
    return X, E, F
