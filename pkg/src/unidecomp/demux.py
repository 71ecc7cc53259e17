"""Demultiplexing of ``diag(u0, u1)`` into ``(I x V) diag(D, D^dag) (I x W)``."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import DimensionMismatchError, NumericalFailure
from .matrix import DEFAULT_TOL, max_abs_diff, require_unitary

RESIDUAL_TOL = 1e-9


@dataclass(frozen=True)
class DemuxResult:
    v: np.ndarray
    w: np.ndarray
    d: np.ndarray

    def reconstruct(self) -> tuple[np.ndarray, np.ndarray]:
        """``(V D W, V D^dag W)``; these equal ``(u0, u1)``."""
        vd = self.v * self.d
        vdc = self.v * self.d.conj()
        return vd @ self.w, vdc @ self.w


def demultiplex(
    u0: np.ndarray, u1: np.ndarray, tol: float = DEFAULT_TOL, verify: bool = True
) -> DemuxResult:
    """Factor the multiplexer ``diag(u0, u1)``.

    ``u0 u1^dag`` is unitary, hence normal, so its complex Schur form is
    diagonal and the Schur vectors form an orthonormal eigenbasis ``V``.
    ``D`` holds principal square roots of the eigenvalues and
    ``W = D^dag V^dag u0``.
    """
    u0 = require_unitary(u0, tol)
    u1 = require_unitary(u1, tol)
    if u0.shape != u1.shape:
        raise DimensionMismatchError(f"multiplexer blocks differ: {u0.shape} vs {u1.shape}")

    x = u0 @ u1.conj().T
    t, v = scipy.linalg.schur(x, output="complex")
    eig = np.diag(t)
    d = np.exp(0.5j * np.angle(eig))
    w = (d.conj()[:, None] * v.conj().T) @ u0

    result = DemuxResult(v=v, w=w, d=d)
    if not verify:
        return result
    r0, r1 = result.reconstruct()
    residual = max(max_abs_diff(r0, u0), max_abs_diff(r1, u1))
    if not residual <= max(RESIDUAL_TOL, 10 * tol):
        raise NumericalFailure(f"demultiplex reconstruction residual {residual:.3e}")
    return result
