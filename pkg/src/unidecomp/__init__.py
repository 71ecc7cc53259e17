"""Unitary decomposition into Rz, Ry and CNOT gates via Quantum Shannon Decomposition."""

from .circuit import Circuit, Gate, GateCounts, gate_counts, predicted_counts, synthesize
from .cqasm import emit_cqasm, parse_cqasm
from .csd import CsdResult, cosine_sine_decompose
from .demux import DemuxResult, demultiplex
from .errors import DecompositionError, NotUnitaryError
from .matrix import distance_up_to_global_phase, is_unitary, kron, split_quadrants
from .muxrot import (
    MuxRotation,
    expand_multiplexed_rotation,
    gray_control_sequence,
    mk_matrix,
    solve_rotation_angles,
)
from .qsd import DecompositionPlan, decompose
from .verify import VerificationReport, circuit_to_matrix, random_unitary, verify
from .zyz import ZyzAngles, ry_matrix, rz_matrix, zyz_decompose

__version__ = "0.1.0"

__all__ = [
    "Circuit",
    "CsdResult",
    "DecompositionError",
    "DecompositionPlan",
    "DemuxResult",
    "Gate",
    "GateCounts",
    "MuxRotation",
    "NotUnitaryError",
    "VerificationReport",
    "ZyzAngles",
    "circuit_to_matrix",
    "cosine_sine_decompose",
    "decompose",
    "demultiplex",
    "distance_up_to_global_phase",
    "emit_cqasm",
    "expand_multiplexed_rotation",
    "gate_counts",
    "gray_control_sequence",
    "is_unitary",
    "kron",
    "mk_matrix",
    "parse_cqasm",
    "predicted_counts",
    "random_unitary",
    "ry_matrix",
    "rz_matrix",
    "solve_rotation_angles",
    "split_quadrants",
    "synthesize",
    "verify",
    "zyz_decompose",
]
