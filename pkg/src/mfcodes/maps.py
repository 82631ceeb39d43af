"""Transformations between qubit stabilizer codes and Majorana codes."""

from __future__ import annotations

from .errors import InvalidInputCode, OddModeCount, OddTotalModes
from .geometry import Layout
from .gf2 import BitMatrix, from_indices, indices
from .majorana import MajoranaCode, MajoranaOperator, validate
from .pauli import PauliOperator, StabilizerCode

# within each qubit block: b^x, b^y, b^z, c
BX, BY, BZ, C = range(4)
_BLOCK_POS = {BX: (0, 0), BY: (1, 0), BZ: (0, 1), C: (1, 1)}


def pauli_to_majorana_support(p: PauliOperator) -> int:
    """Support of the image of a Pauli operator on the 4n encoding modes."""
    out = 0
    for j in range(p.n):
        xb, zb = (p.x >> j) & 1, (p.z >> j) & 1
        if not (xb or zb):
            continue
        b = BY if (xb and zb) else (BX if xb else BZ)
        out |= (1 << (4 * j + b)) | (1 << (4 * j + C))
    return out


def stabilizer_to_majorana(code: StabilizerCode) -> MajoranaCode:
    """Encode each qubit into four Majorana modes plus a block-parity stabilizer.

    Qubit j owns modes 4j..4j+3 in the order (b^x, b^y, b^z, c), placed as a
    2x2 block at x = 2j, 2j+1.  Logical count is kept and distance doubles.
    """
    if not isinstance(code, StabilizerCode):
        raise InvalidInputCode(f"expected a StabilizerCode, got {type(code).__name__}")
    n = code.n
    rows = [pauli_to_majorana_support(g) for g in code.generators]
    rows += [0b1111 << (4 * j) for j in range(n)]
    positions = []
    for j in range(n):
        for b in range(4):
            dx, dy = _BLOCK_POS[b]
            positions.append((2 * j + dx, dy))
    return MajoranaCode(4 * n, BitMatrix(tuple(rows), 4 * n), Layout(tuple(positions)))


def double(code: MajoranaCode) -> StabilizerCode:
    """Weakly self-dual CSS code with one X check and one Z check per generator."""
    m = code.modes
    if m % 2:
        raise OddModeCount(f"cannot double a code on an odd number ({m}) of modes")
    bad = validate(code)
    if bad:
        raise InvalidInputCode(bad[0].detail)
    gens = []
    for r in code.generators.rows:
        gens.append(PauliOperator(r, 0, m))
        gens.append(PauliOperator(0, r, m))
    return StabilizerCode(m, tuple(gens))


def jordan_wigner(op: MajoranaOperator | int, n: int) -> PauliOperator:
    """Pauli image of a Majorana product on 2n modes, phases dropped.

    Mode 2q maps to Z..Z X_q and mode 2q+1 to Z..Z Y_q (0-indexed), so
    c1 -> X1, c2 -> Y1, c3 -> Z1 X2 in 1-indexed terms.
    """
    support = op.support if isinstance(op, MajoranaOperator) else op
    if isinstance(op, MajoranaOperator) and op.modes % 2:
        raise OddTotalModes(f"{op.modes} modes cannot be paired into qubits")
    if support >> (2 * n):
        raise ValueError(f"support exceeds {2 * n} modes")
    x = z = 0
    for u in indices(support):
        q = u // 2
        string = (1 << q) - 1
        x ^= 1 << q
        z ^= string
        if u % 2:
            z ^= 1 << q
    return PauliOperator(x, z, n)


def jw_map_code(code: MajoranaCode) -> StabilizerCode:
    if code.modes % 2:
        raise OddTotalModes(f"{code.modes} modes cannot be paired into qubits")
    n = code.modes // 2
    return StabilizerCode(n, tuple(jordan_wigner(r, n) for r in code.generators.rows))


def _layout_or_line(code: MajoranaCode) -> Layout:
    return code.layout if code.layout is not None else Layout.line(code.modes, start=0)


def product(code1: MajoranaCode, code2: MajoranaCode, spacer: int = 0) -> MajoranaCode:
    """Side by side placement, optionally separated by ``spacer`` paired idle modes.

    Each spacer pair carries its own weight-2 stabilizer, so the spacer holds
    no logical information but pushes the two blocks ``2 * spacer`` columns
    apart.  Layouts are concatenated along x with unit gaps.
    """
    if spacer < 0:
        raise ValueError("spacer must be non-negative")
    m1, m2 = code1.modes, code2.modes
    s = 2 * spacer
    rows = list(code1.generators.rows)
    rows += [0b11 << (m1 + 2 * i) for i in range(spacer)]
    rows += [r << (m1 + s) for r in code2.generators.rows]
    modes = m1 + s + m2

    positions = []
    x_next = 0
    for block, width in ((code1, m1), (None, s), (code2, m2)):
        if width == 0:
            continue
        if block is None:
            pts = [(i, 0) for i in range(s)]
        else:
            pts = list(_layout_or_line(block).positions)
        x0 = min(p[0] for p in pts)
        positions += [(x - x0 + x_next, y) for x, y in pts]
        x_next += max(p[0] for p in pts) - x0 + 1
    return MajoranaCode(modes, BitMatrix(tuple(rows), modes), Layout(tuple(positions)))


def majorana_from_indices(supports, modes: int, layout: Layout | None = None) -> MajoranaCode:
    return MajoranaCode(modes, BitMatrix(tuple(from_indices(s) for s in supports), modes), layout)
