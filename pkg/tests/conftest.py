from pathlib import Path

import numpy as np
import pytest

from unidecomp import matrixio
from unidecomp.zyz import ry_matrix, rz_matrix

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def example_u():
    """The 3-decimal 2-qubit example matrix."""
    return matrixio.load(DATA / "example_u.txt")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def haar(dim, rng):
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def mux_oracle(axis, target, controls, alphas, n):
    """Brute-force matrix of a multiplexed rotation, column by column."""
    rot = ry_matrix if axis == "y" else rz_matrix
    dim = 1 << n
    m = np.zeros((dim, dim), dtype=complex)
    for col in range(dim):
        j = sum(((col >> c) & 1) << p for p, c in enumerate(controls))
        r = rot(alphas[j])
        tb = (col >> target) & 1
        for ob in (0, 1):
            row = (col & ~(1 << target)) | (ob << target)
            m[row, col] = r[ob, tb]
    return m
