"""Text formats.

``.mfc`` (Majorana code)::

    # comment
    modes 10
    gen 1 2
    pos 0 1 0
    periodic x 12

``gen`` lines list strictly increasing 0-indexed modes, ``pos`` lines give
``mode x y`` and ``periodic <axis> <extent>`` marks a wrapped axis.
``.stab`` files hold one Pauli string per line (see ``pauli``).
"""

from __future__ import annotations

from pathlib import Path

from .errors import CodeError
from .geometry import Layout
from .gf2 import BitMatrix, from_indices, indices
from .majorana import MajoranaCode
from .pauli import StabilizerCode, format_pauli_code, parse_pauli_code


class FormatError(CodeError):
    pass


def parse_mfc(text: str) -> MajoranaCode:
    modes = None
    gens: list[int] = []
    pos: dict[int, tuple[int, int]] = {}
    periodic = [False, False]
    extent: list[int | None] = [None, None]
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word, *rest = line.split()
        try:
            args = [int(a) for a in rest] if word != "periodic" else rest
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer argument") from None
        if word == "modes":
            if len(args) != 1 or args[0] < 0:
                raise FormatError(f"line {lineno}: expected 'modes <m>'")
            modes = args[0]
        elif word == "gen":
            if modes is None:
                raise FormatError(f"line {lineno}: 'gen' before 'modes'")
            if any(b <= a for a, b in zip(args, args[1:])):
                raise FormatError(f"line {lineno}: mode indices must be strictly increasing")
            if args and not (0 <= args[0] and args[-1] < modes):
                raise FormatError(f"line {lineno}: mode index out of range 0..{modes - 1}")
            gens.append(from_indices(args))
        elif word == "pos":
            if len(args) != 3:
                raise FormatError(f"line {lineno}: expected 'pos <mode> <x> <y>'")
            pos[args[0]] = (args[1], args[2])
        elif word == "periodic":
            if len(args) != 2 or args[0] not in ("x", "y") or not args[1].isdigit():
                raise FormatError(f"line {lineno}: expected 'periodic x|y <extent>'")
            ax = 0 if args[0] == "x" else 1
            periodic[ax], extent[ax] = True, int(args[1])
        else:
            raise FormatError(f"line {lineno}: unknown keyword {word!r}")
    if modes is None:
        raise FormatError("missing 'modes' line")
    layout = None
    if pos:
        missing = [u for u in range(modes) if u not in pos]
        if missing:
            raise FormatError(f"no position for modes {missing[:5]}")
        layout = Layout(tuple(pos[u] for u in range(modes)), tuple(periodic), tuple(extent))
    return MajoranaCode(modes, BitMatrix(tuple(gens), modes), layout)


def format_mfc(code: MajoranaCode, comment: str | None = None) -> str:
    out = [f"# {ln}" for ln in (comment.splitlines() if comment else [])]
    out.append(f"modes {code.modes}")
    out += ["gen " + " ".join(map(str, indices(r))) for r in code.generators.rows]
    if code.layout is not None:
        for ax, name in enumerate("xy"):
            if code.layout.periodic[ax]:
                out.append(f"periodic {name} {code.layout.extent[ax]}")
        out += [f"pos {u} {x} {y}" for u, (x, y) in enumerate(code.layout.positions)]
    return "\n".join(out) + "\n"


def read_code(path: str | Path) -> MajoranaCode | StabilizerCode:
    """Dispatch on suffix: ``.stab`` is a qubit code, anything else ``.mfc``."""
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".stab":
        return parse_pauli_code(text)
    return parse_mfc(text)


def write_code(code: MajoranaCode | StabilizerCode, path: str | Path, comment: str | None = None) -> None:
    path = Path(path)
    if isinstance(code, StabilizerCode):
        path.write_text(format_pauli_code(code, comment))
    else:
        path.write_text(format_mfc(code, comment))
