import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import haar
from unidecomp.csd import cosine_sine_decompose
from unidecomp.errors import NotUnitaryError, OddDimensionError
from unidecomp.matrix import block_diag, is_unitary, kron, max_abs_diff, nearest_unitary

DIMS = [2, 4, 8, 16, 32, 64]


def _check_invariants(u, r, tol=1e-9):
    assert max_abs_diff(r.assemble(), u) <= tol
    for f in (r.l0, r.l1, r.r0, r.r1):
        assert is_unitary(f, tol)
    assert np.all(r.thetas >= 0) and np.all(r.thetas <= np.pi / 2)
    assert np.all(np.diff(r.thetas) <= 0)
    np.testing.assert_allclose(np.cos(r.thetas) ** 2 + np.sin(r.thetas) ** 2, 1, atol=1e-12)


@pytest.mark.parametrize("dim", DIMS)
def test_csd_random(dim, rng):
    for _ in range(10):
        u = haar(dim, rng)
        _check_invariants(u, cosine_sine_decompose(u))


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), k=st.integers(1, 5))
def test_csd_property(seed, k):
    u = haar(2**k, np.random.default_rng(seed))
    _check_invariants(u, cosine_sine_decompose(u))


@pytest.mark.parametrize("dim", DIMS)
def test_csd_matches_scipy_cossin(dim, rng):
    u = haar(dim, rng)
    h = dim // 2
    _, cs, _ = scipy.linalg.cossin(u, p=h, q=h)
    ref = np.sort(np.clip(np.real(np.diag(cs[:h, :h])), 0, 1))
    ours = np.sort(np.cos(cosine_sine_decompose(u).thetas))
    np.testing.assert_allclose(ours, ref, atol=1e-9)


def test_csd_identity():
    r = cosine_sine_decompose(np.eye(4))
    np.testing.assert_array_equal(r.thetas, [0, 0])
    assert max_abs_diff(r.assemble(), np.eye(4)) <= 1e-15


def test_csd_swap_like():
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    r = cosine_sine_decompose(kron(x, np.eye(2)))
    np.testing.assert_allclose(r.thetas, [np.pi / 2, np.pi / 2], atol=1e-12)
    _check_invariants(kron(x, np.eye(2)), r)


def test_csd_multiplexer_has_zero_angles(rng):
    u = block_diag(haar(4, rng), haar(4, rng))
    r = cosine_sine_decompose(u)
    assert np.max(r.thetas) <= 1e-7
    _check_invariants(u, r)


def test_csd_example_cosines(example_u):
    u = nearest_unitary(example_u)
    r = cosine_sine_decompose(u)
    np.testing.assert_allclose(np.cos(r.thetas), [0.706, 0.927], atol=2e-3)
    cs = r.central()
    s, c = np.sin(r.thetas), np.cos(r.thetas)
    np.testing.assert_allclose(cs, np.block([[np.diag(c), -np.diag(s)], [np.diag(s), np.diag(c)]]))


def test_csd_errors():
    with pytest.raises(OddDimensionError):
        cosine_sine_decompose(np.eye(3))
    with pytest.raises(NotUnitaryError):
        cosine_sine_decompose(np.ones((4, 4)))
