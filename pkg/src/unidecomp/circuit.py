"""Circuit IR, plan synthesis onto physical qubits, and gate counting."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

from .errors import MalformedPlanError, WrongQubitCountError
from .muxrot import MuxRotation, expand_multiplexed_rotation
from .qsd import DecompositionPlan, MultiplexerShortcut, MuxRy, MuxRz, SkipQubit, Zyz

GATE_KINDS = ("rz", "ry", "cnot")


@dataclass(frozen=True)
class Gate:
    kind: str
    target: int
    angle: Optional[float] = None
    control: Optional[int] = None

    def __post_init__(self):
        if self.kind not in GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if self.kind == "cnot":
            if self.control is None or self.control == self.target:
                raise ValueError("cnot needs a control distinct from its target")
            if self.angle is not None:
                raise ValueError("cnot takes no angle")
        else:
            if self.angle is None or not math.isfinite(self.angle):
                raise ValueError(f"{self.kind} needs a finite angle")
            if self.control is not None:
                raise ValueError(f"{self.kind} takes no control")

    @property
    def qubits(self) -> tuple[int, ...]:
        return (self.target,) if self.control is None else (self.control, self.target)


@dataclass
class Circuit:
    """Gates in time order; the circuit matrix is ``G[-1] @ ... @ G[0]``."""

    n_qubits: int
    gates: list[Gate] = field(default_factory=list)
    name: str = "kernel"

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("a circuit needs at least one qubit")
        for g in self.gates:
            self._check(g)

    def _check(self, g: Gate):
        for q in g.qubits:
            if not 0 <= q < self.n_qubits:
                raise ValueError(f"qubit {q} out of range for {self.n_qubits} qubits")

    def append(self, g: Gate):
        self._check(g)
        self.gates.append(g)

    def __add__(self, other: "Circuit") -> "Circuit":
        return Circuit(max(self.n_qubits, other.n_qubits), self.gates + other.gates, self.name)

    def touched_qubits(self) -> set[int]:
        return {q for g in self.gates for q in g.qubits}


class GateCounts(NamedTuple):
    total: int
    rotations: int
    cnots: int


def gate_counts(c: Circuit) -> GateCounts:
    cnots = sum(1 for g in c.gates if g.kind == "cnot")
    return GateCounts(len(c.gates), len(c.gates) - cnots, cnots)


def predicted_counts(n: int) -> GateCounts:
    """Closed-form counts of the unoptimized decomposition of an n-qubit unitary."""
    if n < 1:
        raise ValueError("n must be >= 1")
    p4, p2 = 4**n, 2**n
    total = 9 * p4 // 4 - 3 * p2
    rotations = 3 * (p4 - p2) // 2
    cnots = 3 * p4 // 4 - 3 * p2 // 2
    return GateCounts(total, rotations, cnots)


def _mux(kind: str, step, qubits: Sequence[int], out: list[Gate]):
    m = len(qubits)
    if len(step.alphas) != 1 << (m - 1):
        raise MalformedPlanError(
            f"{type(step).__name__} with {len(step.alphas)} angles in a {m}-qubit block"
        )
    rot = MuxRotation(kind, qubits[-1], tuple(qubits[:-1]), tuple(step.alphas))
    out.extend(expand_multiplexed_rotation(rot))


class _Walker:
    def __init__(self, steps):
        self.steps = steps
        self.pos = 0

    def take(self, expected=None):
        if self.pos >= len(self.steps):
            raise MalformedPlanError("plan ended in the middle of a block")
        step = self.steps[self.pos]
        if expected is not None and not isinstance(step, expected):
            raise MalformedPlanError(
                f"step {self.pos}: expected {expected.__name__}, got {type(step).__name__}"
            )
        self.pos += 1
        return step

    def block(self, qubits: Sequence[int], out: list[Gate]):
        m = len(qubits)
        if m == 1:
            z = self.take(Zyz).angles
            q = qubits[0]
            out += [Gate("rz", q, z.gamma), Gate("ry", q, z.beta), Gate("rz", q, z.alpha)]
            return
        if self.pos >= len(self.steps):
            raise MalformedPlanError("plan ended in the middle of a block")
        head = self.steps[self.pos]
        if isinstance(head, SkipQubit):
            self.pos += 1
            if head.position not in ("msb", "lsb"):
                raise MalformedPlanError(f"bad SkipQubit position {head.position!r}")
            self.block(qubits[:-1] if head.position == "msb" else qubits[1:], out)
            return
        low = qubits[:-1]
        if isinstance(head, MultiplexerShortcut):
            self.pos += 1
            self.block(low, out)
            _mux("z", self.take(MuxRz), qubits, out)
            self.block(low, out)
            return
        self.block(low, out)
        _mux("z", self.take(MuxRz), qubits, out)
        self.block(low, out)
        _mux("y", self.take(MuxRy), qubits, out)
        self.block(low, out)
        _mux("z", self.take(MuxRz), qubits, out)
        self.block(low, out)


def synthesize(
    plan: DecompositionPlan,
    qubits: Optional[Sequence[int]] = None,
    n_qubits: Optional[int] = None,
    name: str = "kernel",
) -> Circuit:
    """Expand ``plan`` onto ``qubits`` (plan position j -> ``qubits[j]``, LSB first).

    ``n_qubits`` defaults to ``max(qubits) + 1``.
    """
    if qubits is None:
        qubits = list(range(plan.n_qubits))
    qubits = [int(q) for q in qubits]
    if len(qubits) != plan.n_qubits:
        raise WrongQubitCountError(
            f"plan is for {plan.n_qubits} qubit(s) but {len(qubits)} were given"
        )
    if len(set(qubits)) != len(qubits) or min(qubits) < 0:
        raise WrongQubitCountError(f"qubit indices must be distinct and non-negative: {qubits}")
    if n_qubits is None:
        n_qubits = max(qubits) + 1
    elif max(qubits) >= n_qubits:
        raise WrongQubitCountError(f"qubit {max(qubits)} outside a {n_qubits}-qubit register")

    walker = _Walker(plan.steps)
    gates: list[Gate] = []
    walker.block(qubits, gates)
    if walker.pos != len(plan.steps):
        raise MalformedPlanError(f"{len(plan.steps) - walker.pos} trailing step(s) in plan")
    return Circuit(n_qubits, gates, name)
