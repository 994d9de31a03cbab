"""Batch front end: load matrices from files, run one operation, emit a
JSON report with residual certificates.

Exit codes: 0 success, 1 usage or input error, 2 the requested inverse
does not exist, 3 a candidate fails verification.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

import numpy as np

from . import __version__
from .core import Tolerances, as_matrix, fro, matrix_index
from .errors import (
    GeneralizedInverseError,
    IndexTooLarge,
    NotComplementary,
    NotExistent,
    NotInner,
    NotOuter,
)
from .classical import drazin, group_inverse, moore_penrose, outer_prescribed
from .ef import (
    bilateral_inverse,
    crcr_inverse,
    ef_canonical_form,
    ef_exists,
    ef_inverse,
    ef_verify,
    mary_inverse,
)
from .catalog import CatalogEntry, named_inverse
from .io import load_matrix, matrix_to_json_dict
from .subspaces import nullspace_of, range_of

_MATRIX_ARGS = {
    "pinv": ["A"],
    "drazin": ["A"],
    "group": ["A"],
    "outer": ["A", "T", "S"],
    "ef": ["A", "E", "F"],
    "crcr": ["A", "B", "C"],
    "mary": ["A", "D"],
    "bilateral": ["A", "X1", "X2"],
    "catalog": ["A"],
    "exists": ["A", "E", "F"],
    "verify": ["A", "E", "F", "X"],
    "canonical": ["A", "E", "F"],
}


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; 2 means not-existent here.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--output", "-o", help="write the JSON report here instead of stdout")
    common.add_argument("--residual-tol", type=float, help="residual acceptance threshold")
    common.add_argument("--rank-rel-tol", type=float, help="relative singular-value cutoff")
    common.add_argument("--idempotency-tol", type=float, help="idempotency acceptance threshold")

    parser = _Parser(prog="efinv", description=__doc__)
    parser.add_argument("--version", action="version", version=f"efinv {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    helps = {
        "pinv": "Moore-Penrose inverse",
        "drazin": "Drazin inverse",
        "group": "group inverse (index at most 1)",
        "outer": "outer inverse with prescribed range and nullspace",
        "ef": "inverse prescribed by the projector pair (E, F)",
        "crcr": "constrained inverse B (CAB)+ C",
        "mary": "inverse along the matrix D",
        "bilateral": "composition of an outer and an inner inverse",
        "catalog": "named composite inverse from the catalog",
        "exists": "existence test for the (E, F) pair",
        "verify": "certify a candidate X against (E, F)",
        "canonical": "inverse assembled from SVD block coordinates",
    }
    for command, labels in _MATRIX_ARGS.items():
        p = sub.add_parser(command, parents=[common], help=helps[command])
        for label in labels:
            kind = "subspace generator" if label in ("T", "S") else "matrix"
            p.add_argument(f"--{label}", required=True, metavar="FILE",
                           help=f"{kind} file ({label})")
        if command == "bilateral":
            p.add_argument("--order", required=True,
                           choices=["outer-first", "inner-first"])
        if command == "catalog":
            p.add_argument("--name", required=True, help="catalog entry name")
            p.add_argument("--m", type=int, help="power for the m-indexed entries")
            p.add_argument("--T", metavar="FILE", help="subspace generator file (T)")
            p.add_argument("--S", metavar="FILE", help="subspace generator file (S)")
    return parser


def _tolerances(args) -> Tolerances:
    residual = args.residual_tol
    if residual is None:
        env = os.environ.get("EFINV_TOL")
        if env is not None:
            try:
                residual = float(env)
            except ValueError:
                raise ValueError(f"EFINV_TOL must be a number, got {env!r}") from None
    kwargs = {}
    if residual is not None:
        kwargs["residual_tol"] = residual
    if args.rank_rel_tol is not None:
        kwargs["rank_rel_tol"] = args.rank_rel_tol
    if args.idempotency_tol is not None:
        kwargs["idempotency_tol"] = args.idempotency_tol
    return Tolerances(**kwargs)


def _digest(M) -> str:
    h = hashlib.sha256()
    h.update(f"{M.shape[0]}x{M.shape[1]}:".encode())
    h.update(np.ascontiguousarray(M).tobytes())
    return h.hexdigest()


def _certificate_dict(cert) -> dict:
    return {
        "outer_residual": cert.outer_residual,
        "left_residual": cert.left_residual,
        "right_residual": cert.right_residual,
        "threshold": cert.threshold,
        "passed": cert.passed,
    }


def _existence_dict(report) -> dict:
    return {
        "exists": report.exists,
        "checks": dict(report.checks),
        "failed_checks": list(report.failed_checks),
        "witness_path": report.witness_path,
        "details": dict(report.details),
    }


def _penrose_residuals(A, X) -> dict:
    return {
        "AXA": fro(A @ X @ A - A),
        "XAX": fro(X @ A @ X - X),
        "AX_hermitian": fro((A @ X).conj().T - A @ X),
        "XA_hermitian": fro((X @ A).conj().T - X @ A),
    }


def _drazin_residuals(A, X, k) -> dict:
    Ak = np.linalg.matrix_power(A, k)
    return {
        "XAX": fro(X @ A @ X - X),
        "commute": fro(A @ X - X @ A),
        "power": fro(Ak @ A @ X - Ak),
    }


def _dispatch(args, tol):
    """Run the requested operation; returns (result, inputs, extras, exit_code)."""
    mats = {label: load_matrix(getattr(args, label)) for label in _MATRIX_ARGS[args.command]}
    A = mats.get("A")
    extras = {}
    code = 0

    if args.command == "pinv":
        X = moore_penrose(A, tol)
        extras["residuals"] = _penrose_residuals(A, X)
    elif args.command in ("drazin", "group"):
        X = drazin(A, tol) if args.command == "drazin" else group_inverse(A, tol)
        extras["residuals"] = _drazin_residuals(A, X, matrix_index(A, tol))
    elif args.command == "outer":
        T = range_of(mats["T"], tol)
        S = range_of(mats["S"], tol)
        X = outer_prescribed(A, T, S, tol)
        extras["residuals"] = {
            "XAX": fro(X @ A @ X - X),
            "range_distance": fro(range_of(X, tol).projector() - T.projector()),
            "nullspace_distance": fro(nullspace_of(X, tol).projector() - S.projector()),
        }
    elif args.command == "ef":
        X = ef_inverse(A, mats["E"], mats["F"], tol)
        extras["certificate"] = ef_verify(A, mats["E"], mats["F"], X, tol)
    elif args.command == "canonical":
        X = ef_canonical_form(A, mats["E"], mats["F"], tol)
        extras["certificate"] = ef_verify(A, mats["E"], mats["F"], X, tol)
    elif args.command == "crcr":
        X = crcr_inverse(A, mats["B"], mats["C"], tol)
        extras["certificate"] = ef_verify(A, X @ A, A @ X, X, tol)
    elif args.command == "mary":
        X = mary_inverse(A, mats["D"], tol)
        extras["certificate"] = ef_verify(A, X @ A, A @ X, X, tol)
    elif args.command == "bilateral":
        X, E, F = bilateral_inverse(A, mats["X1"], mats["X2"], args.order, tol)
        extras["certificate"] = ef_verify(A, E, F, X, tol)
    elif args.command == "catalog":
        if args.T:
            mats["T"] = load_matrix(args.T)
        if args.S:
            mats["S"] = load_matrix(args.S)
        entry = CatalogEntry(
            name=args.name,
            m=args.m,
            T=range_of(mats["T"], tol) if args.T else None,
            S=range_of(mats["S"], tol) if args.S else None,
        )
        result = named_inverse(A, entry, tol)
        X = result.X
        extras["certificate"] = result.certificate
        extras["catalog"] = {"name": result.name, "bilateral": result.bilateral}
    elif args.command == "exists":
        report = ef_exists(A, mats["E"], mats["F"], tol)
        extras["existence"] = report
        return None, mats, extras, 0 if report.exists else 2
    elif args.command == "verify":
        cert = ef_verify(A, mats["E"], mats["F"], mats["X"], tol)
        extras["certificate"] = cert
        return None, mats, extras, 0 if cert.passed else 3

    cert = extras.get("certificate")
    if cert is not None and not cert.passed:
        code = 3
    return X, mats, extras, code


def _summary_lines(extras) -> list:
    lines = []
    cert = extras.get("certificate")
    if cert is not None:
        status = "PASS" if cert.passed else "FAIL"
        lines.append(
            f"certificate {status}: outer={cert.outer_residual:.3e} "
            f"left={cert.left_residual:.3e} right={cert.right_residual:.3e} "
            f"(threshold {cert.threshold:.3e})"
        )
    report = extras.get("existence")
    if report is not None:
        lines.append(f"exists: {report.exists}")
        for label, value in report.checks.items():
            mark = "FAIL" if label in report.failed_checks else "ok"
            lines.append(f"  check {label}: {value:.3e} [{mark}]")
    for label, value in extras.get("residuals", {}).items():
        lines.append(f"residual {label}: {value:.3e}")
    return lines


def _params_dict(args, tol) -> dict:
    params = {
        "residual_tol": tol.residual_tol,
        "rank_rel_tol": tol.rank_rel_tol,
        "idempotency_tol": tol.idempotency_tol,
    }
    for key in ("name", "m", "order"):
        value = getattr(args, key, None)
        if value is not None:
            params[key] = value
    return params


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0

    started = time.perf_counter()
    error_info = None
    result = None
    extras = {}
    mats = {}
    try:
        tol = _tolerances(args)
        result, mats, extras, code = _dispatch(args, tol)
    except NotExistent as exc:
        code = 2
        error_info = {"error": str(exc)}
        if exc.report is not None:
            extras["existence"] = exc.report
        if exc.violated:
            error_info["violated"] = list(exc.violated)
        if exc.ranks is not None:
            error_info["ranks"] = list(exc.ranks)
    except (IndexTooLarge, NotComplementary) as exc:
        code = 2
        error_info = {"error": str(exc)}
    except (NotOuter, NotInner) as exc:
        code = 3
        error_info = {"error": str(exc)}
    except (GeneralizedInverseError, ValueError, OSError) as exc:
        print(f"efinv: error: {exc}", file=sys.stderr)
        return 1

    report = {
        "command": args.command,
        "tool_version": __version__,
        "inputs": {
            label: {
                "path": getattr(args, label),
                "rows": M.shape[0],
                "cols": M.shape[1],
                "sha256": _digest(M),
            }
            for label, M in mats.items()
        },
        "params": _params_dict(args, tol),
        "result": matrix_to_json_dict(result) if result is not None else None,
        "elapsed_seconds": time.perf_counter() - started,
    }
    if error_info is not None:
        report.update(error_info)
    if "certificate" in extras:
        report["certificate"] = _certificate_dict(extras["certificate"])
    if "existence" in extras:
        report["existence"] = _existence_dict(extras["existence"])
    if "residuals" in extras:
        report["residuals"] = extras["residuals"]
    if "catalog" in extras:
        report["catalog"] = extras["catalog"]

    text = json.dumps(report, indent=2)
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(text + "\n")
    else:
        print(text)
    for line in _summary_lines(extras):
        print(line, file=sys.stderr)
    if error_info is not None:
        print(f"efinv: {error_info['error']}", file=sys.stderr)
    return code
