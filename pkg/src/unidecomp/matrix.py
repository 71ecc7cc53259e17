"""Dense complex matrix helpers: predicates, block splitting and comparison.

Matrices are plain ``numpy`` arrays of dtype ``complex128``.  Row/column
index ``b`` of a ``2**n`` matrix is read as the binary number
``b_{n-1} ... b_0`` where bit ``j`` belongs to qubit ``j``; qubit 0 is the
least significant bit.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import (
    DimensionError,
    DimensionMismatchError,
    NotPowerOfTwoError,
    NotUnitaryError,
    OddDimensionError,
)

DEFAULT_TOL = 1e-9


class Quadrants(NamedTuple):
    u00: np.ndarray
    u01: np.ndarray
    u10: np.ndarray
    u11: np.ndarray

    def assemble(self) -> np.ndarray:
        return np.block([[self.u00, self.u01], [self.u10, self.u11]])


def as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise DimensionError(f"expected a non-empty square matrix, got shape {a.shape}")
    return a


def num_qubits(m: np.ndarray) -> int:
    """Number of qubits of a ``2**n`` square matrix (n >= 1)."""
    dim = as_matrix(m).shape[0]
    n = dim.bit_length() - 1
    if dim < 2 or (1 << n) != dim:
        raise NotPowerOfTwoError(f"dimension {dim} is not 2**n with n >= 1")
    return n


def unitarity_defect(m: np.ndarray) -> float:
    """max-abs entry of ``M M^dag - I``."""
    m = as_matrix(m)
    return float(np.max(np.abs(m @ m.conj().T - np.eye(m.shape[0]))))


def is_unitary(m: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    return unitarity_defect(m) <= tol


def require_unitary(m: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    m = as_matrix(m)
    defect = unitarity_defect(m)
    if not defect <= tol:
        raise NotUnitaryError(defect, tol)
    return m


def nearest_unitary(m: np.ndarray) -> np.ndarray:
    """Unitary polar factor of ``m`` (closest unitary in Frobenius norm)."""
    w, _, vh = np.linalg.svd(as_matrix(m))
    return w @ vh


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(as_matrix(a), as_matrix(b))


def split_quadrants(m: np.ndarray) -> Quadrants:
    """Split on the most significant qubit; ``u00`` has MSB = 0 on both sides."""
    m = as_matrix(m)
    dim = m.shape[0]
    if dim % 2:
        raise OddDimensionError(f"cannot split a matrix of odd dimension {dim}")
    h = dim // 2
    return Quadrants(m[:h, :h].copy(), m[:h, h:].copy(), m[h:, :h].copy(), m[h:, h:].copy())


def block_diag(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    za = np.zeros((a.shape[0], b.shape[1]), dtype=np.complex128)
    zb = np.zeros((b.shape[0], a.shape[1]), dtype=np.complex128)
    return np.block([[a, za], [zb, b]])


def max_abs_diff(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def distance_up_to_global_phase(a: np.ndarray, b: np.ndarray) -> float:
    """max-abs difference between ``a`` and ``exp(i phi) b`` with the phase aligned.

    ``phi = arg(trace(b^dag a))``; when that trace vanishes the phase is
    taken as 0 and the plain max-abs difference is returned.
    """
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shapes differ: {a.shape} vs {b.shape}")
    t = np.vdot(b, a)  # == trace(b^dag a)
    phase = t / abs(t) if t != 0 else 1.0
    return max_abs_diff(a, phase * b)
