"""Catalog of named composite inverses, each certified through its
projector pair.

Every entry computes X by its closed form, assembles the pair (E, F) with
E = XA and F = AX spelled out from the entry's factors, and returns the
residual certificate of XAX=X, XA=E, AX=F.  Entries from the bilateral
table can additionally be re-derived through the outer/inner composition
and compared.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_TOL, Tolerances, as_matrix, fro, matrix_index
from .errors import BadParams, NotSquare
from .classical import drazin, group_inverse, moore_penrose, outer_prescribed
from .ef import Certificate, bilateral_inverse, ef_verify
from .subspaces import Subspace, range_of

TABLE1_NAMES = (
    "GMP",
    "MPG",
    "DMP",
    "MPD",
    "CMP",
    "MPCEP",
    "*CEPMP",
    "WGMP",
    "MPWG",
    "OMP",
    "MPO",
    "MPOMP",
)
TABLE2_NAMES = ("BT", "CEP", "*CEP", "WG", "GG", "m-WG", "m-WC", "k-OMP", "k-MPO")
CATALOG_NAMES = TABLE1_NAMES + TABLE2_NAMES

_ALIASES = {"core": "GMP", "dual-core": "MPG"}
_LOOKUP = {name.lower(): name for name in CATALOG_NAMES}
_LOOKUP.update({alias.lower(): target for alias, target in _ALIASES.items()})

_NEEDS_SUBSPACES = {"OMP", "MPO", "MPOMP", "k-OMP", "k-MPO"}
_NEEDS_M = {"m-WG", "m-WC"}
_RECTANGULAR_OK = {"OMP", "MPO", "MPOMP"}


def canonical_name(name: str) -> str:
    """Resolve a case-insensitive catalog name or alias."""
    try:
        return _LOOKUP[name.strip().lower()]
    except KeyError:
        raise BadParams(f"unknown catalog name {name!r}; known: {', '.join(CATALOG_NAMES)}") from None


@dataclass(frozen=True)
class CatalogEntry:
    """A catalog selection: the name plus whatever parameters it needs.

    ``m`` is the power for the m-indexed entries; ``T`` and ``S`` prescribe
    the outer inverse for the OMP family.
    """

    name: str
    m: int | None = None
    T: Subspace | None = None
    S: Subspace | None = None


@dataclass(frozen=True)
class CatalogResult:
    name: str
    X: np.ndarray
    E: np.ndarray
    F: np.ndarray
    certificate: Certificate
    bilateral: bool


@dataclass(frozen=True)
class CrosscheckReport:
    """Agreement between a catalog entry and its bilateral re-derivation."""

    name: str
    order: str
    distance: float
    e_distance: float
    f_distance: float
    matches: bool
    certificate: Certificate


def _validate(name: str, entry: CatalogEntry, shape) -> None:
    if name in _NEEDS_SUBSPACES and (entry.T is None or entry.S is None):
        raise BadParams(f"{name} needs both T and S subspaces")
    if name in _NEEDS_M and (entry.m is None or entry.m < 1):
        raise BadParams(f"{name} needs a power m >= 1, got {entry.m}")
    if name not in _RECTANGULAR_OK and shape[0] != shape[1]:
        raise NotSquare(f"{name} needs a square matrix, got {shape[0]}x{shape[1]}")


def _range_projector(M, tol) -> np.ndarray:
    return range_of(M, tol).projector()


def _corange_projector(M, tol) -> np.ndarray:
    return range_of(np.asarray(M).conj().T, tol).projector()


def named_inverse(a, entry: CatalogEntry, tol: Tolerances | None = None) -> CatalogResult:
    """Compute a named inverse with its projector pair and certificate.

    First-table entries multiply out as X1 @ A @ X2 in that order so the
    result is bit-identical to the bilateral re-derivation, not merely
    equal within tolerance.
    """
    A = as_matrix(a)
    tol = tol or DEFAULT_TOL
    name = canonical_name(entry.name)
    _validate(name, entry, A.shape)

    P = moore_penrose(A, tol)
    PA = A @ P
    QA = P @ A

    if name in ("OMP", "MPO", "MPOMP"):
        Xts = outer_prescribed(A, entry.T, entry.S, tol)
        if name == "OMP":
            X = Xts @ A @ P
            E, F = Xts @ A, A @ Xts @ PA
        elif name == "MPO":
            X = QA @ Xts
            E, F = QA @ Xts @ A, A @ Xts
        else:  # MPOMP
            X = QA @ Xts @ A @ P
            E, F = QA @ Xts @ A, A @ Xts @ PA
        cert = ef_verify(A, E, F, X, tol)
        return CatalogResult(name, X, E, F, cert, bilateral=True)

    k = matrix_index(A, tol)
    if name in ("GMP", "MPG"):
        Ag = group_inverse(A, tol)  # raises IndexTooLarge when k >= 2
        if name == "GMP":
            X = Ag @ A @ P
            E, F = Ag @ A, PA
        else:
            X = QA @ Ag
            E, F = QA, A @ Ag
        cert = ef_verify(A, E, F, X, tol)
        return CatalogResult(name, X, E, F, cert, bilateral=True)

    Ad = drazin(A, tol)
    Ak = np.linalg.matrix_power(A, k)
    Pk = _range_projector(Ak, tol)
    Qk = _corange_projector(Ak, tol)
    core_ep = Ad @ Pk
    dual_core_ep = Qk @ Ad

    if name == "DMP":
        X = Ad @ A @ P
        E, F = Ad @ A, A @ Ad @ PA
    elif name == "MPD":
        X = QA @ Ad
        E, F = QA @ Ad @ A, A @ Ad
    elif name == "CMP":
        X = QA @ Ad @ A @ P
        E, F = QA @ Ad @ A, A @ Ad @ PA
    elif name == "MPCEP":
        X = QA @ core_ep
        E, F = QA @ core_ep @ A, A @ core_ep
    elif name == "*CEPMP":
        X = dual_core_ep @ A @ P
        E, F = dual_core_ep @ A, A @ dual_core_ep @ PA
    elif name in ("WG", "WGMP", "MPWG"):
        Aw = core_ep @ core_ep @ A
        if name == "WG":
            X = Aw
            E, F = core_ep @ core_ep @ A @ A, A @ Aw
        elif name == "WGMP":
            X = Aw @ A @ P
            E, F = Aw @ A, A @ Aw @ PA
        else:
            X = QA @ Aw
            E, F = QA @ Aw @ A, A @ Aw
    elif name == "BT":
        X = moore_penrose(A @ PA, tol)
        E, F = X @ A, _range_projector(A @ A, tol)
    elif name == "CEP":
        X = core_ep
        E, F = core_ep @ A, Pk
    elif name == "*CEP":
        X = dual_core_ep
        E, F = Qk, A @ dual_core_ep
    elif name in ("GG", "m-WG", "m-WC"):
        power = 2 if name == "GG" else entry.m
        ep_pow = np.linalg.matrix_power(core_ep, power + 1)
        a_pow = np.linalg.matrix_power(A, power)
        Awm = ep_pow @ a_pow
        if name == "m-WC":
            Pm = _range_projector(a_pow, tol)
            X = Awm @ Pm
            E, F = Awm @ Pm @ A, A @ Awm @ Pm
        else:
            X = Awm
            E, F = ep_pow @ a_pow @ A, A @ Awm
    elif name == "k-OMP":
        Xts = outer_prescribed(A, entry.T, entry.S, tol)
        X = Xts @ Pk
        E, F = Xts @ Pk @ A, A @ Xts @ Pk
    elif name == "k-MPO":
        Xts = outer_prescribed(A, entry.T, entry.S, tol)
        X = Qk @ Xts
        E, F = Qk @ Xts @ A, A @ Qk @ Xts
    else:  # pragma: no cover - canonical_name already filtered
        raise BadParams(f"unhandled catalog name {name}")

    cert = ef_verify(A, E, F, X, tol)
    return CatalogResult(name, X, E, F, cert, bilateral=name in TABLE1_NAMES)


def catalog_crosscheck(a, entry: CatalogEntry, tol: Tolerances | None = None) -> CrosscheckReport:
    """Re-derive a bilateral-table inverse as outer(X1) then inner(A+).

    Raises
    ------
    BadParams
        For second-table names, which are not bilateral compositions.
    """
    A = as_matrix(a)
    tol = tol or DEFAULT_TOL
    name = canonical_name(entry.name)
    if name in TABLE2_NAMES:
        raise BadParams(f"{name} is not a generalized bilateral inverse")
    named = named_inverse(A, entry, tol)

    P = moore_penrose(A, tol)
    QA = P @ A
    if name in ("GMP", "MPG"):
        X1 = group_inverse(A, tol)
        order = "outer-first" if name == "GMP" else "inner-first"
    elif name in ("DMP", "MPD"):
        X1 = drazin(A, tol)
        order = "outer-first" if name == "DMP" else "inner-first"
    elif name == "CMP":
        X1 = QA @ drazin(A, tol)
        order = "outer-first"
    elif name in ("MPCEP", "*CEPMP"):
        k = matrix_index(A, tol)
        Ak = np.linalg.matrix_power(A, k)
        if name == "MPCEP":
            X1 = drazin(A, tol) @ _range_projector(Ak, tol)
            order = "inner-first"
        else:
            X1 = _corange_projector(Ak, tol) @ drazin(A, tol)
            order = "outer-first"
    elif name in ("WGMP", "MPWG"):
        k = matrix_index(A, tol)
        core_ep = drazin(A, tol) @ _range_projector(np.linalg.matrix_power(A, k), tol)
        X1 = core_ep @ core_ep @ A
        order = "outer-first" if name == "WGMP" else "inner-first"
    elif name in ("OMP", "MPO"):
        X1 = outer_prescribed(A, entry.T, entry.S, tol)
        order = "outer-first" if name == "OMP" else "inner-first"
    else:  # MPOMP
        X1 = QA @ outer_prescribed(A, entry.T, entry.S, tol)
        order = "outer-first"

    X, E, F = bilateral_inverse(A, X1, P, order, tol)
    cert = ef_verify(A, E, F, X, tol)
    t = tol.residual_tol
    distance = fro(X - named.X)
    e_distance = fro(E - named.E)
    f_distance = fro(F - named.F)
    matches = (
        distance < t * max(1.0, fro(named.X))
        and e_distance < t * max(1.0, fro(named.E))
        and f_distance < t * max(1.0, fro(named.F))
    )
    return CrosscheckReport(
        name=name,
        order=order,
        distance=distance,
        e_distance=e_distance,
        f_distance=f_distance,
        matches=matches,
        certificate=cert,
    )
