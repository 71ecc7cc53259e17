import math
from pathlib import Path

import pytest

from unidecomp.circuit import Circuit, Gate
from unidecomp.cqasm import GENERATOR_COMMENT, emit_cqasm, format_angle, parse_cqasm
from unidecomp.errors import CqasmSyntaxError, QubitOutOfRangeError, UnsupportedGateError

DATA = Path(__file__).parent / "data"


def random_circuit(rng, n, length):
    gates = []
    for _ in range(length):
        kind = rng.choice(["rz", "ry", "cnot"]) if n > 1 else rng.choice(["rz", "ry"])
        if kind == "cnot":
            c, t = rng.choice(n, 2, replace=False)
            gates.append(Gate("cnot", int(t), control=int(c)))
        else:
            gates.append(Gate(str(kind), int(rng.integers(n)), angle=float(rng.uniform(-7, 7))))
    return Circuit(n, gates, name="k" + str(length))


def test_format_angle():
    assert format_angle(math.pi) == "3.141593"
    assert format_angle(-0.0) == "0.000000"
    assert format_angle(-1e-9) == "0.000000"
    assert format_angle(-2.5) == "-2.500000"


def test_emit_layout():
    c = Circuit(2, [Gate("rz", 0, angle=0.5), Gate("cnot", 1, control=0)], name="newKernel")
    assert emit_cqasm(c) == (
        "version 1.0\n"
        f"{GENERATOR_COMMENT}\n"
        "qubits 2\n"
        "\n"
        ".newKernel\n"
        "    rz q[0], 0.500000\n"
        "    cnot q[0],q[1]\n"
    )


def test_parse_printed_listing():
    c = parse_cqasm((DATA / "example_listing.qasm").read_text())
    assert c.n_qubits == 2 and c.name == "newKernel"
    assert len(c.gates) == 24
    assert sum(g.kind == "cnot" for g in c.gates) == 6
    assert c.gates[0] == Gate("rz", 0, angle=2.898309)


def test_round_trip_random_circuits(rng):
    for i in range(100):
        n = int(rng.integers(1, 6))
        c = random_circuit(rng, n, int(rng.integers(0, 40)))
        text = emit_cqasm(c)
        back = parse_cqasm(text)
        assert back.n_qubits == c.n_qubits and back.name == c.name
        assert [(g.kind, g.target, g.control) for g in back.gates] == [
            (g.kind, g.target, g.control) for g in c.gates
        ]
        for a, b in zip(back.gates, c.gates):
            if a.angle is not None:
                assert abs(a.angle - b.angle) <= 5e-7
        assert emit_cqasm(back) == text


def test_parse_tolerates_comments_and_spacing():
    text = "version 1.0\nqubits 2  # two\n\n.k\n  rz   q[1],  -0.25\n\tcnot q[1], q[0]\n"
    c = parse_cqasm(text)
    assert c.gates == [Gate("rz", 1, angle=-0.25), Gate("cnot", 0, control=1)]


@pytest.mark.parametrize(
    "text, exc",
    [
        ("version 1.0\nqubits 1\n.k\n    h q[0]\n", UnsupportedGateError),
        ("version 1.0\nqubits 1\n.k\n    rz q[3], 0.1\n", QubitOutOfRangeError),
        ("version 1.0\nqubits 2\n.k\n    cnot q[0],q[0]\n", CqasmSyntaxError),
        ("version 1.0\nqubits 1\n.k\n    rz q[0]\n", CqasmSyntaxError),
        ("version 2.0\nqubits 1\n", CqasmSyntaxError),
        ("", CqasmSyntaxError),
    ],
)
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_cqasm(text)


def test_unsupported_gate_reports_line():
    with pytest.raises(UnsupportedGateError) as info:
        parse_cqasm("version 1.0\nqubits 1\n.k\n    h q[0]\n")
    assert info.value.line == 4


def test_quantization_bound_holds():
    from unidecomp.circuit import synthesize
    from unidecomp.cqasm import quantization_bound
    from unidecomp.matrix import distance_up_to_global_phase
    from unidecomp.qsd import decompose
    from unidecomp.verify import circuit_to_matrix, random_unitary

    for n in (1, 3, 5):
        c = synthesize(decompose(random_unitary(n, seed=n)))
        printed = parse_cqasm(emit_cqasm(c))
        drift = distance_up_to_global_phase(circuit_to_matrix(printed), circuit_to_matrix(c))
        assert drift <= quantization_bound(c)
    assert quantization_bound(Circuit(2, [Gate("cnot", 1, control=0)])) == 0
