"""cQASM v1.0 text emission and parsing for the rz/ry/cnot dialect."""

from __future__ import annotations

import re

from .circuit import Circuit, Gate
from .errors import CqasmSyntaxError, QubitOutOfRangeError, UnsupportedGateError

GENERATOR_COMMENT = "# generated by unidecomp; do not modify manually."

_NAME_RE = re.compile(r"^\.([A-Za-z_][A-Za-z0-9_]*)$")
_ROT_RE = re.compile(r"^(rz|ry)\s+q\[(\d+)\]\s*,\s*([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)$")
_CNOT_RE = re.compile(r"^cnot\s+q\[(\d+)\]\s*,\s*q\[(\d+)\]$")
_WORD_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)")


ANGLE_DECIMALS = 6


def quantization_bound(c: Circuit) -> float:
    """Worst-case phase-aligned residual added by printing ``c``'s angles.

    Each angle moves by at most half a unit in the last place, i.e. each
    rotation by at most a quarter unit in operator norm; phase alignment can
    double the max-abs difference.
    """
    rotations = sum(1 for g in c.gates if g.kind != "cnot")
    return rotations * 0.5 * 10.0**-ANGLE_DECIMALS


def format_angle(x: float) -> str:
    s = f"{x:.{ANGLE_DECIMALS}f}"
    return "0.000000" if s == "-0.000000" else s


def emit_cqasm(c: Circuit) -> str:
    lines = ["version 1.0", GENERATOR_COMMENT, f"qubits {c.n_qubits}", "", f".{c.name}"]
    for g in c.gates:
        if g.kind == "cnot":
            lines.append(f"    cnot q[{g.control}],q[{g.target}]")
        else:
            lines.append(f"    {g.kind} q[{g.target}], {format_angle(g.angle)}")
    return "\n".join(lines) + "\n"


def parse_cqasm(text: str) -> Circuit:
    n_qubits = None
    name = None
    version_seen = False
    gates: list[Gate] = []

    def qubit(lineno: int, s: str) -> int:
        q = int(s)
        if q >= n_qubits:
            raise QubitOutOfRangeError(lineno, f"q[{q}] outside a {n_qubits}-qubit register")
        return q

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not version_seen:
            if line != "version 1.0":
                raise CqasmSyntaxError(lineno, f"expected 'version 1.0', got {line!r}")
            version_seen = True
            continue
        if n_qubits is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "qubits" or not parts[1].isdigit() or int(parts[1]) < 1:
                raise CqasmSyntaxError(lineno, f"expected 'qubits N', got {line!r}")
            n_qubits = int(parts[1])
            continue
        if line.startswith("."):
            m = _NAME_RE.match(line)
            if not m:
                raise CqasmSyntaxError(lineno, f"bad kernel name {line!r}")
            if name is not None:
                raise CqasmSyntaxError(lineno, "only one kernel is supported")
            name = m.group(1)
            continue
        word = _WORD_RE.match(line)
        if not word:
            raise CqasmSyntaxError(lineno, f"cannot parse {line!r}")
        op = word.group(1).lower()
        if op not in ("rz", "ry", "cnot"):
            raise UnsupportedGateError(lineno, op)
        if name is None:
            raise CqasmSyntaxError(lineno, "gate before kernel name")
        if op == "cnot":
            m = _CNOT_RE.match(line)
            if not m:
                raise CqasmSyntaxError(lineno, f"malformed cnot {line!r}")
            ctrl, tgt = qubit(lineno, m.group(1)), qubit(lineno, m.group(2))
            if ctrl == tgt:
                raise CqasmSyntaxError(lineno, "cnot control equals target")
            gates.append(Gate("cnot", tgt, control=ctrl))
        else:
            m = _ROT_RE.match(line)
            if not m:
                raise CqasmSyntaxError(lineno, f"malformed {op} {line!r}")
            gates.append(Gate(op, qubit(lineno, m.group(2)), angle=float(m.group(3))))

    if not version_seen:
        raise CqasmSyntaxError(1, "empty program")
    if n_qubits is None:
        raise CqasmSyntaxError(len(text.splitlines()) or 1, "missing 'qubits N'")
    return Circuit(n_qubits, gates, name or "kernel")
