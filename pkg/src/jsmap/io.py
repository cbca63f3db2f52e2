"""File formats: operator tables, Hardy elements, group specs and CSV output."""

from __future__ import annotations

import csv
import json
import sys
from pathlib import Path

import numpy as np

from . import operators as ops
from .groups import FiniteGroup, IntegerGroup
from .hardy import HardyElement


class ParseError(ValueError):
    def __init__(self, message, path=None, row=None, column=None):
        super().__init__(message)
        self.path = None if path is None else str(path)
        self.row = row
        self.column = column

    def as_dict(self) -> dict:
        return {"error": str(self), "kind": "parse", "path": self.path, "row": self.row, "column": self.column}


def fmt(x: float) -> str:
    """17 significant digits, scientific."""
    return f"{float(x):.16e}"


def parse_complex(value, path=None, row=None, column=None) -> complex:
    try:
        if isinstance(value, (list, tuple)):
            re_, im_ = value
            return complex(float(re_), float(im_))
        if isinstance(value, str):
            return complex(value.strip().replace(" ", "").replace("i", "j"))
        return complex(value)
    except (TypeError, ValueError):
        raise ParseError(f"cannot read complex value {value!r}", path, row, column) from None


# ---- matrices ----

def read_matrix(path, N: int | None = None) -> ops.OperatorMatrix:
    path = Path(path)
    if path.suffix.lower() == ".json":
        try:
            spec = json.loads(path.read_text())
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc.strerror}", path) from None
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", path, exc.lineno, exc.colno) from None
        return matrix_from_spec(spec, N, path)
    return read_matrix_csv(path, N)


def matrix_from_spec(spec: dict, N: int | None = None, path=None) -> ops.OperatorMatrix:
    kind = spec.get("kind", "dense")
    try:
        if kind == "diagonal":
            return ops.diagonal([parse_complex(v, path) for v in spec["values"]])
        if kind == "jordan":
            return ops.jordan([parse_complex(v, path) for v in spec["eigs"]], spec["blocks"])
        if kind in ("toeplitz", "two_sided_toeplitz"):
            size = int(spec.get("N", N or 0))
            if size < 1:
                raise ParseError(f"{kind} matrix needs a size N", path)
            offsets = {int(k): parse_complex(v, path) for k, v in spec["offsets"].items()}
            build = ops.toeplitz if kind == "toeplitz" else ops.two_sided_toeplitz
            return build(offsets, size)
        if kind == "dense":
            rows = spec["entries"]
            return ops.dense([[parse_complex(v, path, i + 1, j + 1) for j, v in enumerate(r)] for i, r in enumerate(rows)])
    except KeyError as exc:
        raise ParseError(f"missing field {exc.args[0]!r} for kind {kind!r}", path) from None
    raise ParseError(f"unknown matrix kind {kind!r}", path)


def read_matrix_csv(path, N: int | None = None) -> ops.OperatorMatrix:
    """Sparse triplets under a ``m,n,re,im`` header (1-based), otherwise a dense grid of complex cells."""
    path = Path(path)
    try:
        with path.open(newline="") as fh:
            rows = [r for r in csv.reader(fh) if r and any(c.strip() for c in r)]
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}", path) from None
    if not rows:
        raise ParseError("empty matrix file", path)
    header = [c.strip().lower() for c in rows[0]]
    if header == ["m", "n", "re", "im"]:
        return _triplets(rows[1:], path, N, first_row=2)
    grid = [[parse_complex(c, path, i + 1, j + 1) for j, c in enumerate(r)] for i, r in enumerate(rows)]
    widths = {len(r) for r in grid}
    if widths != {len(grid)}:
        raise ParseError(f"dense matrix must be square, got {len(grid)} rows of widths {sorted(widths)}", path)
    return ops.dense(grid)


def _triplets(rows, path, N, first_row) -> ops.OperatorMatrix:
    data = []
    for i, r in enumerate(rows, first_row):
        if len(r) != 4:
            raise ParseError(f"expected 4 columns m,n,re,im, got {len(r)}", path, i, len(r))
        vals = []
        for j, cell in enumerate(r, 1):
            try:
                vals.append(int(cell) if j <= 2 else float(cell))
            except ValueError:
                raise ParseError(f"bad value {cell!r}", path, i, j) from None
        m, n, re_, im_ = vals
        if m < 1 or n < 1:
            raise ParseError("indices are 1-based", path, i, 1 if m < 1 else 2)
        data.append((m, n, complex(re_, im_)))
    size = N or max(max(m, n) for m, n, _ in data)
    a = np.zeros((size, size), complex)
    for m, n, c in data:
        if m > size or n > size:
            raise ParseError(f"index ({m},{n}) exceeds N={size}", path)
        a[m - 1, n - 1] += c
    return ops.dense(a)


def write_matrix_triplets(path, A) -> None:
    a = ops.as_entries(A)
    rows = [(i + 1, j + 1, fmt(a[i, j].real), fmt(a[i, j].imag)) for i, j in zip(*np.nonzero(a))]
    write_csv(path, ("m", "n", "re", "im"), rows)


# ---- Hardy elements ----

def hardy_from_pairs(pairs, d: int = 1, path=None) -> HardyElement:
    """JSON array of [re, im] pairs, fiber-major: index = fiber * N + (n - 1)."""
    vals = [parse_complex(p, path, i + 1) for i, p in enumerate(pairs)]
    if len(vals) % d:
        raise ParseError(f"{len(vals)} values do not split into fiber dimension {d}", path)
    N = len(vals) // d
    return HardyElement(np.asarray(vals, complex).reshape(d, N).T)


def hardy_to_pairs(f: HardyElement) -> list:
    return [[float(c.real), float(c.imag)] for c in f.coeffs.T.ravel()]


def read_hardy(path, d: int = 1) -> HardyElement:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}", path) from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", path, exc.lineno, exc.colno) from None
    return hardy_from_pairs(data, d, path)


# ---- groups ----

def read_group(path):
    path = Path(path)
    try:
        spec = json.loads(path.read_text())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}", path) from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", path, exc.lineno, exc.colno) from None
    return group_from_spec(spec, path)


def group_from_spec(spec: dict, path=None):
    if spec.get("kind") == "integers":
        return IntegerGroup(), int(spec.get("window", 4))
    try:
        return FiniteGroup.from_dict(spec), None
    except (KeyError, ValueError) as exc:
        raise ParseError(f"invalid group specification: {exc}", path) from None


# ---- CSV ----

def write_csv(path, header, rows) -> None:
    """Deterministic CSV: '\\n' line endings, rows in the given order."""
    text = ",".join(header) + "\n" + "".join(",".join(str(c) for c in r) + "\n" for r in rows)
    if path is None or str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)
