"""Solvability and general solutions of AXB = C and of the paired system
AX = D, XB = E."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_TOL, Tolerances, as_matrix, fro, residual_ok
from .errors import ShapeMismatch
from .classical import moore_penrose


@dataclass(frozen=True)
class SolutionFamily:
    """A particular solution plus the affine family it generates.

    ``family`` is "sandwich" for AXB = C, where members are
    particular + Z - (I - La) Z (I - Rb), and "paired" for {AX=D, XB=E},
    where members are particular + La Z Rb; La and Rb are the stored
    annihilators I - A+A and I - BB+.
    """

    particular: np.ndarray
    left_annihilator: np.ndarray
    right_annihilator: np.ndarray
    consistent: bool
    family: str

    def member(self, free) -> np.ndarray:
        Z = as_matrix(free)
        if Z.shape != self.particular.shape:
            raise ShapeMismatch(
                f"free parameter shape {Z.shape} != solution shape {self.particular.shape}"
            )
        La, Rb = self.left_annihilator, self.right_annihilator
        if self.family == "sandwich":
            keep_l = np.eye(La.shape[0], dtype=np.complex128) - La
            keep_r = np.eye(Rb.shape[0], dtype=np.complex128) - Rb
            return self.particular + Z - keep_l @ Z @ keep_r
        return self.particular + La @ Z @ Rb


def solve_axb(a, b, c, tol: Tolerances | None = None) -> SolutionFamily:
    """General solution of A X B = C.

    Consistent iff A A+ C B+ B = C; the particular solution is A+ C B+ and
    every member of the family satisfies the equation when consistent.
    """
    A, B, C = as_matrix(a), as_matrix(b), as_matrix(c)
    tol = tol or DEFAULT_TOL
    if C.shape != (A.shape[0], B.shape[1]):
        raise ShapeMismatch(
            f"C must be {A.shape[0]}x{B.shape[1]} for A{A.shape} X B{B.shape}, got {C.shape}"
        )
    Ap = moore_penrose(A, tol)
    Bp = moore_penrose(B, tol)
    residual = fro(A @ Ap @ C @ Bp @ B - C)
    consistent = residual_ok(residual, fro(C), tol.residual_tol)
    n, p = A.shape[1], B.shape[0]
    return SolutionFamily(
        particular=Ap @ C @ Bp,
        left_annihilator=np.eye(n, dtype=np.complex128) - Ap @ A,
        right_annihilator=np.eye(p, dtype=np.complex128) - B @ Bp,
        consistent=consistent,
        family="sandwich",
    )


def common_solution(a, b, d, emat, tol: Tolerances | None = None) -> SolutionFamily:
    """Common solution of AX = D and XB = E.

    Solvable iff each equation is solvable on its own and A E = D B; then
    X0 = A+ D + (I - A+A) E B+ satisfies both equations simultaneously.
    """
    A, B, D, E = as_matrix(a), as_matrix(b), as_matrix(d), as_matrix(emat)
    tol = tol or DEFAULT_TOL
    m, n = A.shape
    p, q = B.shape
    if D.shape != (m, p):
        raise ShapeMismatch(f"D must be {m}x{p}, got {D.shape}")
    if E.shape != (n, q):
        raise ShapeMismatch(f"E must be {n}x{q}, got {E.shape}")
    Ap = moore_penrose(A, tol)
    Bp = moore_penrose(B, tol)
    t = tol.residual_tol
    left_solvable = residual_ok(fro(A @ Ap @ D - D), fro(D), t)
    right_solvable = residual_ok(fro(E @ Bp @ B - E), fro(E), t)
    compatible = residual_ok(fro(A @ E - D @ B), fro(A @ E), t)
    La = np.eye(n, dtype=np.complex128) - Ap @ A
    return SolutionFamily(
        particular=Ap @ D + La @ E @ Bp,
        left_annihilator=La,
        right_annihilator=np.eye(p, dtype=np.complex128) - B @ Bp,
        consistent=left_solvable and right_solvable and compatible,
        family="paired",
    )
