"""Exception hierarchy shared by every stage of the compiler."""


class DecompositionError(Exception):
    """Base class for all errors raised by this package."""


class NotUnitaryError(DecompositionError, ValueError):
    def __init__(self, defect: float, tol: float):
        self.defect = defect
        self.tol = tol
        super().__init__(
            f"matrix is not unitary: max|U U^dag - I| = {defect:.3e} > tolerance {tol:.3e}"
        )


class DimensionError(DecompositionError, ValueError):
    """Matrix shape does not fit the operation."""


class OddDimensionError(DimensionError):
    pass


class DimensionMismatchError(DimensionError):
    pass


class NotPowerOfTwoError(DimensionError):
    pass


class TooManyQubitsError(DimensionError):
    pass


class NumericalFailure(DecompositionError, ArithmeticError):
    """A factorization did not reassemble to its input within tolerance."""


class StepVerificationFailed(NumericalFailure):
    def __init__(self, level: int, kind: str, residual: float, tol: float):
        self.level = level
        self.kind = kind
        self.residual = residual
        super().__init__(
            f"{kind} step at {level}-qubit level failed verification: "
            f"residual {residual:.3e} > {tol:.3e}"
        )


class KTooLargeError(DecompositionError, ValueError):
    pass


class BadLengthError(DecompositionError, ValueError):
    pass


class NonUnitModulusError(DecompositionError, ValueError):
    pass


class MalformedPlanError(DecompositionError, ValueError):
    pass


class WrongQubitCountError(DecompositionError, ValueError):
    pass


class CqasmError(DecompositionError, ValueError):
    """Base for cQASM parse errors; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class CqasmSyntaxError(CqasmError):
    pass


class UnsupportedGateError(CqasmError):
    def __init__(self, line: int, name: str):
        self.name = name
        super().__init__(line, f"unsupported gate '{name}'")


class QubitOutOfRangeError(CqasmError):
    pass
