"""Matrix (de)serialization.

A matrix document is JSON of the form::

    {"rows": 2, "cols": 2, "data": [[re, im], [re, im], ...]}

with ``data`` row-major and of length rows * cols. Collections of named
matrices are JSON objects mapping names ("A", "B", "X", ...) to such
documents. Round-trips are bit-exact for finite doubles.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .linalg import as_matrix

__all__ = [
    "matrix_to_doc",
    "matrix_from_doc",
    "read_matrix",
    "write_matrix",
    "read_matrices",
    "write_matrices",
]


def matrix_to_doc(M) -> dict[str, Any]:
    """Serialize a matrix to its document form."""
    A = as_matrix(M)
    rows, cols = A.shape
    flat = A.reshape(-1)
    return {
        "rows": int(rows),
        "cols": int(cols),
        "data": [[float(z.real), float(z.imag)] for z in flat],
    }


def matrix_from_doc(doc) -> np.ndarray:
    """Parse and validate a matrix document."""
    if not isinstance(doc, dict):
        raise ValueError("matrix document must be a JSON object")
    for name in ("rows", "cols"):
        value = doc.get(name)
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise ValueError(f"field '{name}' must be a positive integer")
    rows, cols = doc["rows"], doc["cols"]
    data = doc.get("data")
    if not isinstance(data, list):
        raise ValueError("field 'data' must be a list of [re, im] pairs")
    if len(data) != rows * cols:
        raise ValueError(f"field 'data' has length {len(data)}, expected rows*cols = {rows * cols}")
    out = np.empty(rows * cols, dtype=complex)
    for k, entry in enumerate(data):
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in entry)
        ):
            raise ValueError(f"field 'data' entry {k} must be a [re, im] pair of numbers")
        re, im = float(entry[0]), float(entry[1])
        if not (np.isfinite(re) and np.isfinite(im)):
            raise ValueError(f"field 'data' entry {k} must be finite")
        out[k] = complex(re, im)
    return out.reshape((rows, cols))


def _open_for(path_or_fp, mode: str):
    if hasattr(path_or_fp, "read") or hasattr(path_or_fp, "write"):
        return path_or_fp, False
    return open(path_or_fp, mode, encoding="utf-8"), True


def write_matrix(path_or_fp, M) -> None:
    """Write one matrix document to a path or text stream."""
    fp, owned = _open_for(path_or_fp, "w")
    try:
        json.dump(matrix_to_doc(M), fp)
        fp.write("\n")
    finally:
        if owned:
            fp.close()


def read_matrix(path_or_fp) -> np.ndarray:
    """Read one matrix document from a path or text stream."""
    fp, owned = _open_for(path_or_fp, "r")
    try:
        return matrix_from_doc(json.load(fp))
    finally:
        if owned:
            fp.close()


def write_matrices(path_or_fp, matrices: dict[str, Any]) -> None:
    """Write named matrices as one JSON object."""
    fp, owned = _open_for(path_or_fp, "w")
    try:
        json.dump({name: matrix_to_doc(M) for name, M in matrices.items()}, fp)
        fp.write("\n")
    finally:
        if owned:
            fp.close()


def read_matrices(path_or_fp) -> dict[str, np.ndarray]:
    """Read named matrices from one JSON object."""
    fp, owned = _open_for(path_or_fp, "r")
    try:
        doc = json.load(fp)
    finally:
        if owned:
            fp.close()
    if not isinstance(doc, dict):
        raise ValueError("expected a JSON object of named matrix documents")
    return {name: matrix_from_doc(sub) for name, sub in doc.items()}
