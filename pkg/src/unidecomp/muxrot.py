"""Multiplexed (uniformly controlled) Ry/Rz rotations as Gray-code CNOT cascades.

A multiplexed rotation applies ``R_axis(alphas[j])`` to the target, where
``j`` is the integer whose bit ``p`` is the value of ``controls[p]``.  The
cascade applies ``R(thetas[0]), CNOT, R(thetas[1]), CNOT, ...``; the CNOT
after rotation ``i`` is controlled by the bit that changes between Gray
codes ``i`` and ``i + 1`` (cyclically).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import BadLengthError, KTooLargeError

MAX_K = 16
_FAST_K = 10

_mk_cache: dict[int, np.ndarray] = {}
_mk_lock = threading.Lock()


def gray(i: int) -> int:
    return i ^ (i >> 1)


def _popcount_parity(x: np.ndarray) -> np.ndarray:
    x = x.copy()
    parity = np.zeros_like(x)
    while np.any(x):
        parity ^= x & 1
        x >>= 1
    return parity


def mk_matrix(k: int) -> np.ndarray:
    """``M[i, j] = (-1)^(popcount(i & gray(j)))`` as a read-only int8 array.

    Memoized per ``k``; repeated calls return the same array object.
    """
    if not 1 <= k <= MAX_K:
        raise KTooLargeError(f"k must be in 1..{MAX_K}, got {k}")
    m = _mk_cache.get(k)
    if m is not None:
        return m
    with _mk_lock:
        m = _mk_cache.get(k)
        if m is None:
            idx = np.arange(1 << k, dtype=np.int64)
            g = idx ^ (idx >> 1)
            m = (1 - 2 * _popcount_parity(idx[:, None] & g[None, :])).astype(np.int8)
            m.setflags(write=False)
            _mk_cache[k] = m
    return m


def _fwht(a: np.ndarray) -> np.ndarray:
    a = a.copy()
    h = 1
    n = a.shape[0]
    while h < n:
        a = a.reshape(-1, 2, h)
        a = np.stack((a[:, 0] + a[:, 1], a[:, 0] - a[:, 1]), axis=1)
        h *= 2
    return a.reshape(n)


def _log2_length(n: int) -> int:
    k = n.bit_length() - 1
    if n < 1 or (1 << k) != n:
        raise BadLengthError(f"angle count {n} is not a power of two")
    return k


def solve_rotation_angles(alphas: Sequence[float]) -> np.ndarray:
    """Solve ``M^k thetas = alphas`` via ``thetas = M^T alphas / 2^k``."""
    a = np.asarray(alphas, dtype=np.float64)
    if a.ndim != 1:
        raise BadLengthError("angles must be a flat sequence")
    k = _log2_length(a.shape[0])
    if k == 0:
        return a.copy()
    if k >= _FAST_K:
        if k > MAX_K:
            raise KTooLargeError(f"k must be in 1..{MAX_K}, got {k}")
        # (M^T a)[j] = sum_i (-1)^<i, gray(j)> a[i] = WHT(a)[gray(j)]
        idx = np.arange(1 << k)
        return _fwht(a)[idx ^ (idx >> 1)] / (1 << k)
    return (mk_matrix(k).T @ a) / (1 << k)


def gray_control_sequence(k: int) -> list[int]:
    """Bit position for each of the ``2^k`` CNOTs of a k-control cascade."""
    if k < 1:
        raise BadLengthError(f"k must be >= 1, got {k}")
    n = 1 << k
    return [(gray(i) ^ gray((i + 1) % n)).bit_length() - 1 for i in range(n)]


@dataclass(frozen=True)
class MuxRotation:
    axis: str  # "y" or "z"
    target: int
    controls: tuple[int, ...]
    alphas: tuple[float, ...]

    def __post_init__(self):
        if self.axis not in ("y", "z"):
            raise ValueError(f"axis must be 'y' or 'z', got {self.axis!r}")
        if len(set(self.controls)) != len(self.controls) or self.target in self.controls:
            raise ValueError("controls must be distinct and exclude the target")
        if len(self.alphas) != 1 << len(self.controls):
            raise BadLengthError(
                f"{len(self.controls)} controls need {1 << len(self.controls)} angles, "
                f"got {len(self.alphas)}"
            )


def expand_multiplexed_rotation(m: MuxRotation) -> list:
    """Gate list (time order) implementing ``m``: 2^k rotations and 2^k CNOTs."""
    from .circuit import Gate

    kind = "ry" if m.axis == "y" else "rz"
    thetas = solve_rotation_angles(m.alphas)
    k = len(m.controls)
    if k == 0:
        return [Gate(kind, m.target, angle=float(thetas[0]))]
    gates = []
    for theta, bit in zip(thetas, gray_control_sequence(k)):
        gates.append(Gate(kind, m.target, angle=float(theta)))
        gates.append(Gate("cnot", m.target, control=m.controls[bit]))
    return gates
