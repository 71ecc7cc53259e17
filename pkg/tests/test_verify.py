import numpy as np
import pytest

from conftest import haar
from unidecomp.circuit import Circuit, Gate
from unidecomp.errors import DimensionMismatchError, TooManyQubitsError
from unidecomp.matrix import is_unitary, kron
from unidecomp.verify import circuit_to_matrix, embed_gate, random_unitary, verify
from unidecomp.zyz import rz_matrix

CNOT_01 = np.array([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]])


def test_cnot_little_endian():
    # control q[0] (LSB), target q[1]
    c = Circuit(2, [Gate("cnot", 1, control=0)])
    np.testing.assert_array_equal(circuit_to_matrix(c), CNOT_01)


def test_single_qubit_embedding():
    c = Circuit(2, [Gate("rz", 1, angle=0.3)])
    np.testing.assert_allclose(circuit_to_matrix(c), kron(rz_matrix(0.3), np.eye(2)), atol=1e-15)


def test_time_order():
    g0, g1 = Gate("rz", 0, angle=0.3), Gate("cnot", 1, control=0)
    c = Circuit(2, [g0, g1])
    np.testing.assert_allclose(circuit_to_matrix(c), embed_gate(g1, 2) @ embed_gate(g0, 2), atol=1e-15)


def test_fast_path_matches_kron_embedding(rng):
    for n in (1, 2, 3, 4):
        gates = []
        for _ in range(30):
            if n > 1 and rng.random() < 0.4:
                c, t = rng.choice(n, 2, replace=False)
                gates.append(Gate("cnot", int(t), control=int(c)))
            else:
                kind = "ry" if rng.random() < 0.5 else "rz"
                gates.append(Gate(kind, int(rng.integers(n)), angle=float(rng.uniform(-4, 4))))
        ref = np.eye(1 << n, dtype=complex)
        for g in gates:
            ref = embed_gate(g, n) @ ref
        assert np.max(np.abs(circuit_to_matrix(Circuit(n, gates)) - ref)) <= 1e-13


def test_verify_reports(rng):
    u = np.diag([np.exp(-0.15j), np.exp(0.15j)])
    rep = verify(Circuit(1, [Gate("rz", 0, angle=0.3)]), u)
    assert rep.passed and rep.residual <= 1e-15
    rep = verify(Circuit(1, []), haar(2, rng))
    assert not rep.passed


def test_verify_global_phase_is_free():
    rep = verify(Circuit(1, [Gate("rz", 0, angle=0.3)]), rz_matrix(0.3) * 1j)
    assert rep.passed


def test_verify_errors():
    with pytest.raises(DimensionMismatchError):
        verify(Circuit(1, []), np.eye(4))
    with pytest.raises(TooManyQubitsError):
        circuit_to_matrix(Circuit(13, []))


def test_random_unitary():
    a = random_unitary(3, seed=7)
    assert a.shape == (8, 8) and is_unitary(a, 1e-12)
    np.testing.assert_array_equal(a, random_unitary(3, seed=7))
    assert not np.allclose(a, random_unitary(3, seed=8))


def test_multiplicative(rng):
    gates = [Gate("ry", 0, angle=0.4), Gate("cnot", 0, control=1), Gate("rz", 1, angle=-1.0)]
    c1, c2 = Circuit(2, gates[:2]), Circuit(2, gates[2:])
    np.testing.assert_allclose(
        circuit_to_matrix(c1 + c2), circuit_to_matrix(c2) @ circuit_to_matrix(c1), atol=1e-12
    )


def test_empty_circuit_is_identity():
    np.testing.assert_array_equal(circuit_to_matrix(Circuit(2, [])), np.eye(4))


def test_perturbed_angle_fails():
    from unidecomp.circuit import synthesize
    from unidecomp.qsd import decompose

    u = random_unitary(2, seed=6)
    c = synthesize(decompose(u))
    assert verify(c, u).residual <= 1e-12
    g = c.gates[1]
    bumped = Gate(g.kind, g.target, angle=g.angle + 0.1)
    bad = Circuit(2, c.gates[:1] + [bumped] + c.gates[2:])
    assert not verify(bad, u).passed


def test_gate_embeddings_unitary(rng):
    for g in [Gate("rz", 1, angle=0.3), Gate("ry", 2, angle=-2.0), Gate("cnot", 0, control=2)]:
        assert is_unitary(embed_gate(g, 3), 1e-14)
