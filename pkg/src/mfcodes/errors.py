"""Exception types.  Everything derives from ``CodeError`` (a ``ValueError``)."""


class CodeError(ValueError):
    pass


class IllegalCharacter(CodeError):
    pass


class LengthMismatch(CodeError):
    pass


class NonCommutingGenerators(CodeError):
    def __init__(self, i: int, j: int):
        super().__init__(f"generators {i} and {j} do not commute")
        self.pair = (i, j)


class NoLogicalQubits(CodeError):
    pass


class NoLogicals(CodeError):
    pass


class NoLayout(CodeError):
    pass


class OddLogicalModeCount(CodeError):
    pass


class InvalidInputCode(CodeError):
    pass


class OddModeCount(CodeError):
    pass


class OddTotalModes(CodeError):
    pass


class UnknownName(CodeError):
    pass


class BadParams(CodeError):
    pass


class WidthExceedsLattice(CodeError):
    pass


class StripsTooNarrow(CodeError):
    pass


class InconsistencyDetected(RuntimeError):
    """An outcome the underlying theorem rules out; indicates a bug."""


class InvalidSurface(CodeError):
    pass


class EvenR(CodeError):
    pass


class RTooSmall(CodeError):
    pass


class NotAPath(CodeError):
    pass


class PathDoesNotConnectExternalFaces(CodeError):
    pass


class TooLarge(CodeError):
    pass
