"""Matrix file formats: Matrix Market (array and coordinate) and JSON.

Floating-point values are written with ``repr``, whose shortest-round-trip
guarantee makes write-then-read reproduce every finite double bit-for-bit.
The JSON layout is ``{"rows": m, "cols": n, "data": [[re, im], ...]}`` with
``data`` in row-major order.
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .core import as_matrix

_MM_FIELDS = {"real", "complex", "integer"}
_MM_SYMMETRIES = {"general", "symmetric", "hermitian", "skew-symmetric"}


def matrix_to_json_dict(a) -> dict:
    M = as_matrix(a)
    m, n = M.shape
    data = [[float(z.real), float(z.imag)] for z in M.ravel()]
    return {"rows": m, "cols": n, "data": data}


def matrix_from_json_dict(payload) -> np.ndarray:
    if not isinstance(payload, dict):
        raise ValueError("JSON matrix must be an object")
    try:
        rows, cols, data = payload["rows"], payload["cols"], payload["data"]
    except KeyError as exc:
        raise ValueError(f"JSON matrix missing key {exc}") from exc
    if not (isinstance(rows, int) and isinstance(cols, int) and rows > 0 and cols > 0):
        raise ValueError("rows and cols must be positive integers")
    if len(data) != rows * cols:
        raise ValueError(f"data length {len(data)} != rows*cols = {rows * cols}")
    try:
        flat = [complex(float(re), float(im)) for re, im in data]
    except (TypeError, ValueError) as exc:
        raise ValueError("data entries must be [re, im] pairs") from exc
    return as_matrix(np.array(flat, dtype=np.complex128).reshape(rows, cols))


def write_matrix_json(path, a) -> None:
    Path(path).write_text(json.dumps(matrix_to_json_dict(a), indent=1) + "\n")


def read_matrix_json(path) -> np.ndarray:
    try:
        payload = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: invalid JSON: {exc}") from exc
    return matrix_from_json_dict(payload)


def _is_real(M) -> bool:
    # -0.0 imaginary parts force the complex field so the sign bit survives.
    return bool(np.all(M.imag == 0.0) and not np.any(np.signbit(M.imag)))


def _entry_text(z, real: bool) -> str:
    if real:
        return repr(float(z.real))
    return f"{float(z.real)!r} {float(z.imag)!r}"


def write_matrix_market(path, a, fmt: str = "array") -> None:
    """Write in Matrix Market layout; ``fmt`` is ``array`` or ``coordinate``.

    The coordinate form drops entries that are exactly +0.0 in both parts.
    """
    M = as_matrix(a)
    m, n = M.shape
    real = _is_real(M)
    field = "real" if real else "complex"
    if fmt not in ("array", "coordinate"):
        raise ValueError(f"unknown Matrix Market format {fmt!r}")
    lines = [f"%%MatrixMarket matrix {fmt} {field} general"]
    if fmt == "array":
        lines.append(f"{m} {n}")
        for j in range(n):
            for i in range(m):
                lines.append(_entry_text(M[i, j], real))
    else:
        kept = []
        for i in range(m):
            for j in range(n):
                z = M[i, j]
                if z != 0 or np.signbit(z.real) or np.signbit(z.imag):
                    kept.append((i, j, z))
        lines.append(f"{m} {n} {len(kept)}")
        for i, j, z in kept:
            lines.append(f"{i + 1} {j + 1} {_entry_text(z, real)}")
    Path(path).write_text("\n".join(lines) + "\n")


def _parse_value(tokens, field):
    if field == "complex":
        if len(tokens) != 2:
            raise ValueError(f"complex entry needs two values, got {tokens}")
        return complex(float(tokens[0]), float(tokens[1]))
    if len(tokens) != 1:
        raise ValueError(f"{field} entry needs one value, got {tokens}")
    return complex(float(tokens[0]), 0.0)


def _reflect(M, i, j, z, symmetry):
    if i == j:
        return
    if symmetry == "symmetric":
        M[j, i] = z
    elif symmetry == "hermitian":
        M[j, i] = np.conj(z)
    elif symmetry == "skew-symmetric":
        M[j, i] = -z


def read_matrix_market(path) -> np.ndarray:
    text = Path(path).read_text()
    lines = text.splitlines()
    if not lines or not lines[0].startswith("%%MatrixMarket"):
        raise ValueError(f"{path}: missing %%MatrixMarket header")
    header = lines[0].split()
    if len(header) != 5 or header[1].lower() != "matrix":
        raise ValueError(f"{path}: malformed header {lines[0]!r}")
    fmt, field, symmetry = header[2].lower(), header[3].lower(), header[4].lower()
    if fmt not in ("array", "coordinate"):
        raise ValueError(f"{path}: unsupported format {fmt!r}")
    if field not in _MM_FIELDS:
        raise ValueError(f"{path}: unsupported field {field!r}")
    if symmetry not in _MM_SYMMETRIES:
        raise ValueError(f"{path}: unsupported symmetry {symmetry!r}")
    body = [ln for ln in lines[1:] if ln.strip() and not ln.lstrip().startswith("%")]
    if not body:
        raise ValueError(f"{path}: missing size line")
    size = body[0].split()
    rest = body[1:]

    if fmt == "array":
        if len(size) != 2:
            raise ValueError(f"{path}: array size line must be 'm n'")
        m, n = int(size[0]), int(size[1])
        M = np.zeros((m, n), dtype=np.complex128)
        if symmetry == "general":
            coords = [(i, j) for j in range(n) for i in range(m)]
        elif symmetry == "skew-symmetric":
            coords = [(i, j) for j in range(n) for i in range(j + 1, m)]
        else:
            coords = [(i, j) for j in range(n) for i in range(j, m)]
        if len(rest) != len(coords):
            raise ValueError(f"{path}: expected {len(coords)} entries, got {len(rest)}")
        for (i, j), line in zip(coords, rest):
            z = _parse_value(line.split(), field)
            M[i, j] = z
            if symmetry != "general":
                _reflect(M, i, j, z, symmetry)
    else:
        if len(size) != 3:
            raise ValueError(f"{path}: coordinate size line must be 'm n nnz'")
        m, n, nnz = int(size[0]), int(size[1]), int(size[2])
        if len(rest) != nnz:
            raise ValueError(f"{path}: expected {nnz} entries, got {len(rest)}")
        M = np.zeros((m, n), dtype=np.complex128)
        for line in rest:
            tokens = line.split()
            if len(tokens) < 3:
                raise ValueError(f"{path}: malformed coordinate entry {line!r}")
            i, j = int(tokens[0]) - 1, int(tokens[1]) - 1
            if not (0 <= i < m and 0 <= j < n):
                raise ValueError(f"{path}: index ({i + 1}, {j + 1}) out of bounds")
            z = _parse_value(tokens[2:], field)
            M[i, j] = z
            if symmetry != "general":
                _reflect(M, i, j, z, symmetry)
    return as_matrix(M)


def load_matrix(path) -> np.ndarray:
    """Read a matrix file, sniffing Matrix Market vs JSON from the content."""
    head = Path(path).read_text().lstrip()[:14]
    if head.startswith("%%MatrixMarket"):
        return read_matrix_market(path)
    if head.startswith("{"):
        return read_matrix_json(path)
    raise ValueError(f"{path}: neither Matrix Market nor JSON matrix content")


def save_matrix(path, a, fmt: str | None = None) -> None:
    """Write a matrix file; format from ``fmt`` or the path suffix."""
    suffix = Path(path).suffix.lower()
    if fmt == "json" or (fmt is None and suffix == ".json"):
        write_matrix_json(path, a)
    elif fmt in (None, "array", "coordinate"):
        write_matrix_market(path, a, fmt=fmt or "array")
    else:
        raise ValueError(f"unknown matrix file format {fmt!r}")
