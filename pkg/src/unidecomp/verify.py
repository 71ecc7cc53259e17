"""Dense reconstruction of circuit matrices and comparison against a target."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .circuit import Circuit, Gate
from .errors import DimensionMismatchError, TooManyQubitsError
from .matrix import as_matrix, distance_up_to_global_phase
from .zyz import ry_matrix, rz_matrix

MAX_QUBITS = 12

_I2 = np.eye(2, dtype=np.complex128)
_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
_P0 = np.diag([1, 0]).astype(np.complex128)
_P1 = np.diag([0, 1]).astype(np.complex128)


def _guard(n: int):
    if n > MAX_QUBITS:
        raise TooManyQubitsError(f"{n} qubits exceeds the dense limit of {MAX_QUBITS}")


def _single(g: Gate) -> np.ndarray:
    return rz_matrix(g.angle) if g.kind == "rz" else ry_matrix(g.angle)


def embed_gate(g: Gate, n: int) -> np.ndarray:
    """Full ``2**n`` matrix of one gate, built as a Kronecker chain (MSB first)."""
    _guard(n)

    def chain(ops: dict[int, np.ndarray]) -> np.ndarray:
        return reduce(np.kron, [ops.get(q, _I2) for q in reversed(range(n))])

    if g.kind == "cnot":
        return chain({g.control: _P0}) + chain({g.control: _P1, g.target: _X})
    return chain({g.target: _single(g)})


def _apply(t: np.ndarray, g: Gate, n: int):
    """Left-multiply the row tensor ``t`` (shape (2,)*n + (dim,)) by gate ``g`` in place."""
    ax = n - 1 - g.target
    if g.kind == "cnot":
        ctl = [slice(None)] * (n + 1)
        ctl[n - 1 - g.control] = 1
        sub = t[tuple(ctl)]
        # the control axis is gone from ``sub``; shift the target axis if needed
        tax = ax if ax < n - 1 - g.control else ax - 1
        a = [slice(None)] * n
        b = [slice(None)] * n
        a[tax], b[tax] = 0, 1
        tmp = sub[tuple(a)].copy()
        sub[tuple(a)] = sub[tuple(b)]
        sub[tuple(b)] = tmp
        return
    i0 = [slice(None)] * (n + 1)
    i1 = [slice(None)] * (n + 1)
    i0[ax], i1[ax] = 0, 1
    i0, i1 = tuple(i0), tuple(i1)
    m = _single(g)
    if g.kind == "rz":
        t[i0] *= m[0, 0]
        t[i1] *= m[1, 1]
    else:
        r0 = t[i0].copy()
        r1 = t[i1]
        t[i0] = m[0, 0] * r0 + m[0, 1] * r1
        t[i1] = m[1, 0] * r0 + m[1, 1] * r1


def circuit_to_matrix(c: Circuit) -> np.ndarray:
    """``G[-1] @ ... @ G[0]`` for the circuit's gates, as a dense matrix."""
    n = c.n_qubits
    _guard(n)
    dim = 1 << n
    m = np.eye(dim, dtype=np.complex128)
    t = m.reshape((2,) * n + (dim,))
    for g in c.gates:
        _apply(t, g, n)
    return m


@dataclass(frozen=True)
class VerificationReport:
    n_qubits: int
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance


def verify(c: Circuit, u: np.ndarray, tol: float = 1e-8) -> VerificationReport:
    u = as_matrix(u)
    if u.shape[0] != 1 << c.n_qubits:
        raise DimensionMismatchError(
            f"{c.n_qubits}-qubit circuit cannot match a {u.shape[0]}x{u.shape[0]} matrix"
        )
    residual = distance_up_to_global_phase(circuit_to_matrix(c), u)
    return VerificationReport(c.n_qubits, residual, tol)


def random_unitary(n: int, seed: int = 0) -> np.ndarray:
    """Haar-random ``2**n`` unitary: QR of a complex Ginibre matrix with R's phases divided out."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _guard(n)
    dim = 1 << n
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / math.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))
