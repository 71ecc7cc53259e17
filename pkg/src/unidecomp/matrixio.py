"""Matrix files: JSON ``{"dim": D, "matrix": [[[re, im], ...], ...]}`` or plain text.

Plain text: the first line holds ``D``, followed by ``D`` lines of ``D``
whitespace-separated entries written ``a+bi`` / ``a-bi`` (``j`` is accepted
in place of ``i`` on input).
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .matrix import num_qubits


class MatrixFormatError(ValueError):
    pass


def _finite(m: np.ndarray) -> np.ndarray:
    if not np.all(np.isfinite(m)):
        raise MatrixFormatError("matrix has non-finite entries")
    return m


def _check_shape(m: np.ndarray, dim: int) -> np.ndarray:
    if m.shape != (dim, dim):
        raise MatrixFormatError(f"declared dim {dim} but got entries of shape {m.shape}")
    try:
        num_qubits(m)
    except ValueError as exc:
        raise MatrixFormatError(str(exc)) from None
    return _finite(m)


def loads_json(text: str) -> np.ndarray:
    try:
        doc = json.loads(text)
        dim = int(doc["dim"])
        rows = doc["matrix"]
        m = np.array(
            [[complex(float(e[0]), float(e[1])) for e in row] for row in rows],
            dtype=np.complex128,
        )
    except (ValueError, KeyError, TypeError, IndexError) as exc:
        raise MatrixFormatError(f"bad JSON matrix: {exc}") from None
    return _check_shape(m, dim)


def _parse_entry(tok: str) -> complex:
    t = tok.strip().replace("i", "j").replace("I", "j").replace("J", "j")
    if t.endswith("j") and t[:-1] in ("", "+", "-"):
        t = t[:-1] + "1j"
    try:
        return complex(t)
    except ValueError:
        raise MatrixFormatError(f"bad complex entry {tok!r}") from None


def loads_txt(text: str) -> np.ndarray:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise MatrixFormatError("empty matrix file")
    try:
        dim = int(lines[0].strip())
    except ValueError:
        raise MatrixFormatError(f"first line must be the dimension, got {lines[0]!r}") from None
    rows = [[_parse_entry(t) for t in ln.split()] for ln in lines[1:]]
    if len(rows) != dim or any(len(r) != dim for r in rows):
        raise MatrixFormatError(f"expected {dim} rows of {dim} entries")
    return _check_shape(np.array(rows, dtype=np.complex128), dim)


def loads(text: str) -> np.ndarray:
    """Parse either format, sniffing JSON by its leading brace."""
    return loads_json(text) if text.lstrip().startswith("{") else loads_txt(text)


def load(path) -> np.ndarray:
    p = Path(path)
    text = p.read_text()
    if p.suffix == ".json":
        return loads_json(text)
    if p.suffix == ".txt":
        return loads_txt(text)
    return loads(text)


def dumps_json(m: np.ndarray) -> str:
    m = np.asarray(m, dtype=np.complex128)
    doc = {
        "dim": int(m.shape[0]),
        "matrix": [[[float(z.real), float(z.imag)] for z in row] for row in m],
    }
    return json.dumps(doc) + "\n"


def _fmt_entry(z: complex) -> str:
    re_, im = repr(float(z.real)), repr(float(z.imag))
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise MatrixFormatError("cannot write non-finite entries")
    sign = "" if im.startswith("-") else "+"
    return f"{re_}{sign}{im}i"


def dumps_txt(m: np.ndarray) -> str:
    m = np.asarray(m, dtype=np.complex128)
    lines = [str(m.shape[0])] + [" ".join(_fmt_entry(z) for z in row) for row in m]
    return "\n".join(lines) + "\n"


def dump(m: np.ndarray, path, fmt: str | None = None):
    p = Path(path)
    fmt = fmt or ("txt" if p.suffix == ".txt" else "json")
    p.write_text(dumps_txt(m) if fmt == "txt" else dumps_json(m))
