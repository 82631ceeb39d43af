"""Named code fixtures."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import BadParams, UnknownName
from .geometry import Layout
from .gf2 import BitMatrix, from_indices
from .majorana import MajoranaCode
from .pauli import StabilizerCode

HAMMING_CHECKS = ("1010101", "0110011", "0001111")


def kitaev_chain(n: int) -> MajoranaCode:
    """2n modes at x = 1..2n with stabilizers on pairs (2j-1, 2j), 0-indexed."""
    if n < 1:
        raise BadParams("kitaev-chain needs n >= 1")
    rows = tuple(from_indices((2 * j - 1, 2 * j)) for j in range(1, n))
    return MajoranaCode(2 * n, BitMatrix(rows, 2 * n), Layout.line(2 * n))


def four_mode() -> MajoranaCode:
    return MajoranaCode(4, BitMatrix((0b1111,), 4), Layout.line(4))


def steane() -> StabilizerCode:
    xs = [s.replace("1", "X").replace("0", "I") for s in HAMMING_CHECKS]
    zs = [s.replace("1", "Z").replace("0", "I") for s in HAMMING_CHECKS]
    return StabilizerCode.from_strings(xs + zs)


def steane_majorana() -> MajoranaCode:
    """Seven modes with the Hamming checks as stabilizers: half a logical qubit."""
    rows = tuple(from_indices(i for i, ch in enumerate(s) if ch == "1") for s in HAMMING_CHECKS)
    return MajoranaCode(7, BitMatrix(rows, 7), Layout.line(7))


def hex_torus(lx: int, ly: int) -> MajoranaCode:
    """Brick-wall honeycomb on a 6lx x 2ly periodic grid, one mode per vertex.

    Vertex (x, y) is joined to (x+1, y) always and to (x, y+1) when x+y is
    even; each brick with lower-left corner at even x+y is a hexagonal face.
    A width divisible by 6 keeps the faces 3-colorable.
    """
    if lx < 1 or ly < 1:
        raise BadParams("hex-torus needs lx, ly >= 1")
    w, h = 6 * lx, 2 * ly

    def vid(x, y):
        return (y % h) * w + (x % w)

    rows = []
    for y in range(h):
        for x in range(w):
            if (x + y) % 2 == 0:
                rows.append(from_indices(vid(x + dx, y + dy) for dy in (0, 1) for dx in range(3)))
    positions = tuple((v % w, v // w) for v in range(w * h))
    layout = Layout(positions, (True, True), (w, h))
    return MajoranaCode(w * h, BitMatrix(tuple(rows), w * h), layout)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: tuple[str, ...]
    builder: object


CATALOG = {
    "kitaev-chain": CatalogEntry("kitaev-chain", ("n",), kitaev_chain),
    "four-mode": CatalogEntry("four-mode", (), four_mode),
    "steane": CatalogEntry("steane", (), steane),
    "steane-majorana": CatalogEntry("steane-majorana", (), steane_majorana),
    "hex-torus": CatalogEntry("hex-torus", ("lx", "ly"), hex_torus),
}

_CALL = re.compile(r"^\s*([a-z-]+)\s*(?:\(([^)]*)\))?\s*$")


def parse_name(spec: str) -> tuple[str, list[int]]:
    """``"kitaev-chain(5)"`` -> ("kitaev-chain", [5])."""
    m = _CALL.match(spec)
    if not m:
        raise UnknownName(f"cannot parse fixture name {spec!r}")
    args = [a.strip() for a in (m.group(2) or "").split(",") if a.strip()]
    try:
        return m.group(1), [int(a) for a in args]
    except ValueError:
        raise BadParams(f"non-integer parameter in {spec!r}") from None


def catalog_build(name: str, *params: int):
    """Build a named fixture; ``name`` may carry its parameters, e.g. ``hex-torus(2,2)``."""
    if "(" in name:
        name, parsed = parse_name(name)
        params = tuple(parsed) + tuple(params)
    entry = CATALOG.get(name)
    if entry is None:
        raise UnknownName(f"unknown fixture {name!r}; known: {', '.join(sorted(CATALOG))}")
    if len(params) != len(entry.params):
        raise BadParams(f"{name} takes {len(entry.params)} parameter(s) {entry.params}, got {len(params)}")
    return entry.builder(*params)
