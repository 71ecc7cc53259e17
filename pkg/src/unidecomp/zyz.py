"""Single-qubit gates and the Z-Y-Z Euler decomposition."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError
from .matrix import DEFAULT_TOL, as_matrix, require_unitary


def rz_matrix(theta: float) -> np.ndarray:
    """``diag(exp(-i theta/2), exp(i theta/2))``."""
    h = theta / 2
    return np.array([[cmath.exp(-1j * h), 0], [0, cmath.exp(1j * h)]], dtype=np.complex128)


def ry_matrix(theta: float) -> np.ndarray:
    """``[[cos, sin], [-sin, cos]]`` of ``theta/2`` (+sin in the upper right)."""
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array([[c, s], [-s, c]], dtype=np.complex128)


@dataclass(frozen=True)
class ZyzAngles:
    """``U = exp(-i phase) Rz(alpha) Ry(beta) Rz(gamma)``.

    In time order the circuit applies ``Rz(gamma)`` first and ``Rz(alpha)`` last.
    """

    alpha: float
    beta: float
    gamma: float
    phase: float = 0.0

    def matrix(self) -> np.ndarray:
        core = rz_matrix(self.alpha) @ ry_matrix(self.beta) @ rz_matrix(self.gamma)
        return cmath.exp(-1j * self.phase) * core


def zyz_decompose(u: np.ndarray, tol: float = DEFAULT_TOL) -> ZyzAngles:
    u = as_matrix(u)
    if u.shape != (2, 2):
        raise DimensionError(f"ZYZ needs a 2x2 matrix, got {u.shape}")
    require_unitary(u, tol)

    det = u[0, 0] * u[1, 1] - u[0, 1] * u[1, 0]
    half = cmath.phase(det) / 2
    phase = -half
    su = u * cmath.exp(-1j * half)
    # su = [[a, b], [-b*, a*]] with a = cos(beta/2) e^{-i(alpha+gamma)/2},
    # b = sin(beta/2) e^{-i(alpha-gamma)/2}
    a, b = su[0, 0], su[0, 1]
    beta = 2 * math.atan2(abs(su[1, 0]), abs(a))
    if abs(b) == 0.0:
        alpha, gamma = -2 * cmath.phase(a), 0.0
    elif abs(a) == 0.0:
        alpha, gamma = -2 * cmath.phase(b), 0.0
    else:
        pa, pb = cmath.phase(a), cmath.phase(b)
        alpha, gamma = -pa - pb, pb - pa
    return ZyzAngles(alpha + 0.0, beta, gamma + 0.0, phase + 0.0)
