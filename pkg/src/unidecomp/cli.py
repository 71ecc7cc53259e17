"""Command line front end: ``decompose``, ``verify`` and ``random``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import matrixio
from .circuit import Circuit, Gate, gate_counts, predicted_counts, synthesize
from .cqasm import emit_cqasm, parse_cqasm, quantization_bound
from .errors import CqasmError, DecompositionError, NotUnitaryError, WrongQubitCountError
from .matrix import DEFAULT_TOL, num_qubits
from .qsd import decompose
from .verify import MAX_QUBITS, random_unitary, verify

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_INPUT = 0, 1, 2
VERIFY_TOL = 1e-8


class _InputError(Exception):
    pass


def _err(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_INPUT


def _load_matrix(path: str):
    try:
        return matrixio.load(path)
    except FileNotFoundError:
        raise _InputError(f"file not found: {path}") from None
    except matrixio.MatrixFormatError as exc:
        raise _InputError(f"cannot parse matrix file {path}: {exc}") from None


def _parse_qubits(spec: str | None, n: int) -> list[int]:
    if spec is None:
        return list(range(n))
    try:
        qubits = [int(t) for t in spec.replace(",", " ").split()]
    except ValueError:
        raise _InputError(f"--qubits must be a list of integers, got {spec!r}") from None
    return qubits


def _compact(c: Circuit, qubits: list[int]) -> Circuit:
    """Relabel ``qubits[j] -> j`` so the circuit can be compared to the source matrix."""
    back = {q: j for j, q in enumerate(qubits)}
    gates = [
        Gate(g.kind, back[g.target], g.angle, None if g.control is None else back[g.control])
        for g in c.gates
    ]
    return Circuit(len(qubits), gates, c.name)


def cmd_decompose(args) -> int:
    t0 = time.perf_counter()
    try:
        u = _load_matrix(args.input)
        n = num_qubits(u)
        qubits = _parse_qubits(args.qubits, n)
        t_parse = time.perf_counter()
        plan = decompose(
            u, optimize=not args.no_optimize, tol=args.tolerance, verify_steps=not args.no_verify
        )
        t_decomp = time.perf_counter()
        circuit = synthesize(plan, qubits, name=args.name)
        t_synth = time.perf_counter()
    except _InputError as exc:
        return _err(str(exc))
    except NotUnitaryError as exc:
        return _err(f"input matrix is not unitary ({exc})")
    except WrongQubitCountError as exc:
        return _err(f"wrong qubit count: {exc}")
    except DecompositionError as exc:
        return _err(f"decomposition failed: {exc}")

    text = emit_cqasm(circuit)
    t_emit = time.perf_counter()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)

    residual = None
    status = EXIT_OK
    if not args.no_verify and n <= MAX_QUBITS:
        report = verify(_compact(circuit, qubits), u, max(VERIFY_TOL, args.tolerance))
        residual = report.residual
        if not report.passed:
            print(
                f"verification failed: residual {residual:.3e} > {report.tolerance:.3e}",
                file=sys.stderr,
            )
            status = EXIT_VERIFY_FAILED

    if args.stats:
        counts = gate_counts(circuit)
        stats = {
            "n_qubits": n,
            "counts": counts._asdict(),
            "predicted": predicted_counts(n)._asdict(),
            "optimizations": [
                {"kind": k, "count": v} for k, v in plan.optimizations().items()
            ],
            "residual": residual,
            "timings": {
                "parse": t_parse - t0,
                "decompose": t_decomp - t_parse,
                "synthesize": t_synth - t_decomp,
                "emit": t_emit - t_synth,
            },
        }
        Path(args.stats).write_text(json.dumps(stats, indent=2) + "\n")
    return status


def cmd_verify(args) -> int:
    try:
        u = _load_matrix(args.matrix)
        try:
            text = Path(args.qasm).read_text()
        except FileNotFoundError:
            raise _InputError(f"file not found: {args.qasm}") from None
        circuit = parse_cqasm(text)
        tol = args.tolerance
        if tol is None:
            # the file only carries 6 decimals per angle
            tol = VERIFY_TOL + quantization_bound(circuit)
        report = verify(circuit, u, tol)
    except _InputError as exc:
        return _err(str(exc))
    except CqasmError as exc:
        return _err(f"cannot parse cQASM file {args.qasm}: {exc}")
    except DecompositionError as exc:
        return _err(str(exc))
    verdict = "passed" if report.passed else "FAILED"
    print(f"residual {report.residual:.6e} (tolerance {report.tolerance:.3e}): {verdict}")
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_random(args) -> int:
    if not 1 <= args.n <= MAX_QUBITS:
        return _err(f"n must be between 1 and {MAX_QUBITS}, got {args.n}")
    u = random_unitary(args.n, args.seed)
    text = matrixio.dumps_txt(u) if args.format == "txt" else matrixio.dumps_json(u)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unidecomp",
        description="Decompose unitary matrices into Rz/Ry/CNOT circuits (cQASM output).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="decompose a matrix file into cQASM")
    p.add_argument("input", help="matrix file (.json or .txt)")
    p.add_argument("--name", default="kernel", help="kernel name (default: kernel)")
    p.add_argument("--out", help="write cQASM here instead of stdout")
    p.add_argument("--qubits", help="physical qubit for each matrix qubit, LSB first, e.g. 0,1,2")
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOL, help="unitarity tolerance")
    p.add_argument("--no-optimize", action="store_true", help="disable structural shortcuts")
    p.add_argument("--no-verify", action="store_true", help="skip step and final verification")
    p.add_argument("--stats", help="write a JSON statistics report here")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check a cQASM circuit against a matrix")
    p.add_argument("matrix")
    p.add_argument("qasm")
    p.add_argument(
        "--tolerance",
        type=float,
        default=None,
        help="residual bound (default: 1e-8 plus the 6-decimal angle quantization bound)",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("random", help="write a Haar-random unitary matrix file")
    p.add_argument("n", type=int, help="number of qubits")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "txt"), default=None)
    p.set_defaults(func=cmd_random)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "format", "unset") is None:
        args.format = "txt" if args.out and args.out.endswith(".txt") else "json"
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
