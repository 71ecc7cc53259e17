"""Cosine-sine decomposition of an even-dimensional unitary.

    U = [[r0, 0], [0, r1]] @ [[C, -S], [S, C]] @ [[l0, 0], [0, l1]]

with ``C = diag(cos(thetas))``, ``S = diag(sin(thetas))`` and thetas in
``[0, pi/2]`` sorted descending.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalFailure
from .matrix import DEFAULT_TOL, block_diag, max_abs_diff, require_unitary, split_quadrants

RESIDUAL_TOL = 1e-9
# per index at least one of cos/sin is >= sqrt(2)/2, so this never selects
# a divisor smaller than 0.5
_DIVISOR_THRESHOLD = 0.5


@dataclass(frozen=True)
class CsdResult:
    l0: np.ndarray
    l1: np.ndarray
    r0: np.ndarray
    r1: np.ndarray
    thetas: np.ndarray

    def central(self) -> np.ndarray:
        c = np.diag(np.cos(self.thetas)).astype(np.complex128)
        s = np.diag(np.sin(self.thetas)).astype(np.complex128)
        return np.block([[c, -s], [s, c]])

    def left(self) -> np.ndarray:
        return block_diag(self.l0, self.l1)

    def right(self) -> np.ndarray:
        return block_diag(self.r0, self.r1)

    def assemble(self) -> np.ndarray:
        return self.right() @ self.central() @ self.left()


def _orthonormal_columns(x: np.ndarray) -> np.ndarray:
    """Unitary ``q`` with ``q[:, j] = x[:, j] / |x[:, j]|`` for well-resolved columns.

    ``x`` must have mutually orthogonal columns of non-increasing norm;
    vanishing columns are completed to an orthonormal basis.
    """
    q, r = np.linalg.qr(x, mode="complete")
    d = np.diag(r)
    mag = np.abs(d)
    ph = np.ones_like(d)
    nz = mag > 0
    ph[nz] = d[nz] / mag[nz]
    return q * ph


def cosine_sine_decompose(
    u: np.ndarray, tol: float = DEFAULT_TOL, verify: bool = True
) -> CsdResult:
    """Raises ``NumericalFailure`` if ``verify`` and the factors do not reassemble ``u``."""
    u = require_unitary(u, tol)
    u00, u01, u10, u11 = split_quadrants(u)

    w, sigma, vh = np.linalg.svd(u00)
    # ascending cosines -> descending thetas
    r0 = w[:, ::-1]
    l0 = vh[::-1, :]
    c = np.clip(sigma[::-1], 0.0, 1.0)

    x = u10 @ l0.conj().T  # = r1 @ S, columns orthogonal with norms sin(theta_j)
    s = np.linalg.norm(x, axis=0)
    thetas = np.minimum.accumulate(np.arctan2(s, c))
    cos_t, sin_t = np.cos(thetas), np.sin(thetas)

    r1 = _orthonormal_columns(x)

    from_u01 = -(r0.conj().T @ u01)  # = S @ l1
    from_u11 = r1.conj().T @ u11  # = C @ l1
    use_sin = sin_t >= _DIVISOR_THRESHOLD
    l1 = np.empty_like(u00)
    l1[use_sin] = from_u01[use_sin] / sin_t[use_sin, None]
    l1[~use_sin] = from_u11[~use_sin] / cos_t[~use_sin, None]

    result = CsdResult(l0=l0, l1=l1, r0=r0, r1=r1, thetas=thetas)
    if not verify:
        return result
    residual = max_abs_diff(result.assemble(), u)
    if not residual <= max(RESIDUAL_TOL, 10 * tol):
        raise NumericalFailure(f"CSD reassembly residual {residual:.3e}")
    return result
