"""Quantum Shannon Decomposition: unitary -> DecompositionPlan.

The plan is a flat, self-describing instruction stream in circuit (time)
order.  For a block of ``m`` qubits the stream is one of

* ``Zyz``                                         (m == 1)
* ``SkipQubit, <block m-1>``
* ``MultiplexerShortcut, <block m-1>, MuxRz, <block m-1>``
* ``<block m-1>, MuxRz, <block m-1>, MuxRy, <block m-1>, MuxRz, <block m-1>``

Multiplexed rotations always target the most significant qubit of the
current block and are controlled by all lower qubits of that block.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Literal, Optional, Sequence, Union

import numpy as np

from .csd import cosine_sine_decompose
from .demux import demultiplex
from .errors import NonUnitModulusError, StepVerificationFailed
from .matrix import (
    DEFAULT_TOL,
    block_diag,
    max_abs_diff,
    nearest_unitary,
    num_qubits,
    require_unitary,
    split_quadrants,
    unitarity_defect,
)
from .zyz import ZyzAngles, zyz_decompose

STEP_TOL = 1e-9
# inputs accepted under a loose tolerance are snapped to the nearest unitary
_SNAP_THRESHOLD = 1e-12

Position = Literal["msb", "lsb"]


@dataclass(frozen=True)
class Zyz:
    angles: ZyzAngles


@dataclass(frozen=True)
class MuxRy:
    alphas: tuple[float, ...]


@dataclass(frozen=True)
class MuxRz:
    alphas: tuple[float, ...]


@dataclass(frozen=True)
class MultiplexerShortcut:
    pass


@dataclass(frozen=True)
class SkipQubit:
    position: Position


Step = Union[Zyz, MuxRy, MuxRz, MultiplexerShortcut, SkipQubit]


@dataclass(frozen=True)
class DecompositionPlan:
    n_qubits: int
    steps: tuple[Step, ...]
    unitary_hash: str

    def optimizations(self) -> dict[str, int]:
        """How often each structural shortcut fired."""
        out = {"multiplexer": 0, "unaffected_msb": 0, "unaffected_lsb": 0}
        for s in self.steps:
            if isinstance(s, MultiplexerShortcut):
                out["multiplexer"] += 1
            elif isinstance(s, SkipQubit):
                out["unaffected_" + s.position] += 1
        return {k: v for k, v in out.items() if v}


def unitary_digest(u: np.ndarray) -> str:
    a = np.ascontiguousarray(u, dtype=np.complex128)
    h = hashlib.sha256(str(a.shape).encode())
    h.update(a.tobytes())
    return h.hexdigest()


def ry_angles(thetas: Sequence[float]) -> np.ndarray:
    """``2 arcsin(S_ii)`` for the CSD sines ``S_ii = sin(theta_i)``."""
    return 2 * np.arcsin(np.sin(np.asarray(thetas, dtype=np.float64)))


def rz_angles(d: Sequence[complex], tol: float = 1e-10) -> np.ndarray:
    """``-2i ln(D_ii) = -2 arg(D_ii)`` for unit-modulus ``D_ii``."""
    d = np.asarray(d, dtype=np.complex128)
    bad = np.abs(np.abs(d) - 1)
    if bad.size and bad.max() > tol:
        raise NonUnitModulusError(f"diagonal entry off the unit circle by {bad.max():.3e}")
    return -2 * np.angle(d)


def detect_multiplexer(
    u: np.ndarray, tol: float = DEFAULT_TOL
) -> Optional[tuple[np.ndarray, np.ndarray]]:
    q = split_quadrants(u)
    off = max(np.max(np.abs(q.u01)), np.max(np.abs(q.u10)))
    if off <= tol:
        return q.u00, q.u11
    return None


def detect_unaffected_qubit(
    u: np.ndarray, tol: float = DEFAULT_TOL
) -> Optional[tuple[Position, np.ndarray]]:
    """Detect ``kron(I2, A)`` (MSB idle) or ``kron(A, I2)`` (LSB idle)."""
    q = split_quadrants(u)
    off = max(np.max(np.abs(q.u01)), np.max(np.abs(q.u10)))
    if off <= tol and max_abs_diff(q.u00, q.u11) <= tol:
        return "msb", q.u00
    a = u[0::2, 0::2]
    if max_abs_diff(u, np.kron(a, np.eye(2))) <= tol:
        return "lsb", np.ascontiguousarray(a)
    return None


def _snap(u: np.ndarray) -> np.ndarray:
    return nearest_unitary(u) if unitarity_defect(u) > _SNAP_THRESHOLD else u


@dataclass
class _Decomposer:
    optimize: bool
    tol: float
    verify_steps: bool
    steps: list = field(default_factory=list)

    def _check(self, level: int, kind: str, expected: np.ndarray, rebuilt: np.ndarray):
        residual = max_abs_diff(rebuilt, expected)
        if not residual <= STEP_TOL:
            raise StepVerificationFailed(level, kind, residual, STEP_TOL)

    def block(self, u: np.ndarray, m: int):
        if m == 1:
            self.steps.append(Zyz(zyz_decompose(u, tol=self.tol)))
            return
        if self.optimize:
            idle = detect_unaffected_qubit(u, self.tol)
            if idle is not None:
                self.steps.append(SkipQubit(idle[0]))
                self.block(_snap(idle[1]), m - 1)
                return
            mux = detect_multiplexer(u, self.tol)
            if mux is not None:
                self.steps.append(MultiplexerShortcut())
                self.multiplexer(_snap(mux[0]), _snap(mux[1]), m)
                return

        csd = cosine_sine_decompose(u, tol=self.tol, verify=False)
        if self.verify_steps:
            self._check(m, "csd", u, csd.assemble())
        self.multiplexer(csd.l0, csd.l1, m)
        # [[C, -S], [S, C]] is Ry(-2 theta) per control value under the
        # +sin-upper-right Ry convention
        self.steps.append(MuxRy(tuple(float(-a) for a in ry_angles(csd.thetas))))
        self.multiplexer(csd.r0, csd.r1, m)

    def multiplexer(self, u0: np.ndarray, u1: np.ndarray, m: int):
        dm = demultiplex(u0, u1, tol=self.tol, verify=False)
        if self.verify_steps:
            r0, r1 = dm.reconstruct()
            self._check(m, "demultiplex", block_diag(u0, u1), block_diag(r0, r1))
        self.block(dm.w, m - 1)
        self.steps.append(MuxRz(tuple(float(a) for a in rz_angles(dm.d))))
        self.block(dm.v, m - 1)


def decompose(
    u: np.ndarray,
    optimize: bool = True,
    tol: float = DEFAULT_TOL,
    verify_steps: bool = True,
) -> DecompositionPlan:
    """Decompose a ``2**n`` unitary into a plan of ZYZ and multiplexed rotations.

    Raises ``NotUnitaryError`` before any work if ``max|U U^dag - I| > tol``.
    An input that passes only a loose tolerance is replaced by its nearest
    unitary before factoring.
    """
    u = require_unitary(u, tol)
    n = num_qubits(u)
    digest = unitary_digest(u)
    worker = _Decomposer(optimize=optimize, tol=tol, verify_steps=verify_steps)
    worker.block(_snap(u), n)
    return DecompositionPlan(n_qubits=n, steps=tuple(worker.steps), unitary_hash=digest)


def plan_size(n: int) -> int:
    """Instruction count of an unoptimized plan for ``n`` qubits."""
    # 4^(n-1) Zyz plus 3 multiplexed rotations per CSD level
    return 4 ** (n - 1) + sum(3 * 4 ** (n - m) for m in range(2, n + 1))


__all__ = [
    "DecompositionPlan",
    "MultiplexerShortcut",
    "MuxRy",
    "MuxRz",
    "SkipQubit",
    "Step",
    "Zyz",
    "decompose",
    "detect_multiplexer",
    "detect_unaffected_qubit",
    "plan_size",
    "ry_angles",
    "rz_angles",
    "unitary_digest",
]
