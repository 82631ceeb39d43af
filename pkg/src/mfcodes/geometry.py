"""Layouts, regions and the strip/cleaning analysis of local Majorana codes.

Diameter convention: the diameter of a support is its largest pairwise
Chebyshev distance plus one, so a single mode has diameter 1 and the two end
modes of a chain laid out at x = 1..2n have diameter 2n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, NamedTuple, Sequence

import networkx as nx

from .errors import (InconsistencyDetected, NoLayout, NoLogicals, StripsTooNarrow,
                     WidthExceedsLattice)
from .gf2 import (BitMatrix, BitVector, CosetSearch, Echelon, compress, expand, from_indices,
                  indices, kernel_basis, popcount, project, span_within)

if TYPE_CHECKING:
    from .majorana import MajoranaCode

AXES = {"x": 0, "y": 1, 0: 0, 1: 1}


@dataclass(frozen=True)
class Layout:
    positions: tuple[tuple[int, int], ...]
    periodic: tuple[bool, bool] = (False, False)
    extent: tuple[int | None, int | None] = (None, None)

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple((int(x), int(y)) for x, y in self.positions))
        for ax in (0, 1):
            if self.periodic[ax] and not self.extent[ax]:
                raise ValueError(f"periodic axis {ax} needs an extent")

    @classmethod
    def line(cls, m: int, start: int = 1) -> "Layout":
        return cls(tuple((start + u, 0) for u in range(m)))

    def __len__(self) -> int:
        return len(self.positions)

    def axis_distance(self, a: int, b: int, axis: int) -> int:
        d = abs(a - b)
        if self.periodic[axis]:
            d %= self.extent[axis]
            d = min(d, self.extent[axis] - d)
        return d

    def distance(self, u: int, v: int) -> int:
        (x1, y1), (x2, y2) = self.positions[u], self.positions[v]
        return max(self.axis_distance(x1, x2, 0), self.axis_distance(y1, y2, 1))

    def axis_spread(self, values: Iterable[int], axis: int) -> int:
        vals = sorted(set(values))
        if not vals:
            return 0
        if not self.periodic[axis]:
            return vals[-1] - vals[0]
        return max(self.axis_distance(a, b, axis) for a in vals for b in vals)

    def diameter(self, modes: Iterable[int]) -> int:
        modes = list(modes)
        if not modes:
            return 0
        xs = [self.positions[u][0] for u in modes]
        ys = [self.positions[u][1] for u in modes]
        return max(self.axis_spread(xs, 0), self.axis_spread(ys, 1)) + 1

    def shifted(self, dx: int = 0, dy: int = 0) -> "Layout":
        return Layout(tuple((x + dx, y + dy) for x, y in self.positions), self.periodic, self.extent)

    def bounds(self, axis: int) -> tuple[int, int]:
        vals = [p[axis] for p in self.positions]
        return min(vals), max(vals)


def _need_layout(code: "MajoranaCode") -> Layout:
    if code.layout is None:
        raise NoLayout("this operation needs mode positions")
    if len(code.layout) != code.modes:
        raise NoLayout(f"layout has {len(code.layout)} positions for {code.modes} modes")
    return code.layout


def generator_diameter(code: "MajoranaCode") -> int:
    layout = _need_layout(code)
    return max((layout.diameter(indices(r)) for r in code.generators.rows), default=0)


def _region(code: "MajoranaCode", M: Iterable[int]) -> list[int]:
    region = sorted(set(M))
    for u in region:
        if not 0 <= u < code.modes:
            raise ValueError(f"mode {u} outside 0..{code.modes - 1}")
    return region


def stabilizers_within(code: "MajoranaCode", M: Iterable[int]) -> BitMatrix:
    """Basis of the stabilizers whose support lies inside M (full-length vectors)."""
    return span_within(code.generators, _region(code, M))


def stabilizers_restricted(code: "MajoranaCode", M: Iterable[int]) -> BitMatrix:
    """Basis of stabilizer restrictions to M, as |M|-bit vectors over sorted(M)."""
    return project(code.generators, _region(code, M))


class RegionLogicals(NamedTuple):
    """Logical operators supported inside a region (witnesses are full-length)."""
    cleanable: bool
    witness: BitVector | None
    even: BitVector | None
    odd: BitVector | None


def _first_outside(basis: Sequence[int], span: Echelon) -> int | None:
    for v in basis:
        if v not in span:
            return v
    return None


def region_logicals(code: "MajoranaCode", M: Iterable[int], refine: int = 0) -> RegionLogicals:
    """Decide which kinds of logical operator fit inside M.

    In M-local coordinates, commuting operators on M form the complement of
    the restricted stabilizers, and stabilizers inside M are a subspace of it;
    M is cleanable exactly when the two coincide.  With ``refine > 0`` the
    even/odd witnesses are replaced by minimum-weight ones when a search up
    to that weight succeeds.
    """
    region = _region(code, M)
    m = code.modes
    restricted = project(code.generators, region)
    inside = Echelon(compress(r, region) for r in span_within(code.generators, region).rows)
    perp = kernel_basis(restricted).rows
    cleanable = len(perp) == len(inside)
    witness = None if cleanable else _first_outside(perp, inside)

    ones = (1 << len(region)) - 1
    even_perp = kernel_basis(BitMatrix(restricted.rows + (ones,), len(region))).rows
    even = _first_outside(even_perp, inside) if len(even_perp) > len(inside) else None
    odd = next((v for v in perp if popcount(v) & 1), None)

    if refine and not cleanable:
        inside_m = BitMatrix(tuple(inside.basis()), len(region))
        if even is not None:
            res = CosetSearch(BitMatrix(tuple(even_perp), len(region)), inside_m).run(refine)
            if res:
                even = res[1][0][1]
        if odd is not None:
            res = CosetSearch(BitMatrix(tuple(perp), len(region)), inside_m, parity="odd").run(refine)
            if res:
                odd = res[1][0][1]

    def lift(v):
        return None if v is None else BitVector(expand(v, region), m)

    return RegionLogicals(cleanable, lift(witness), lift(even), lift(odd))


def is_cleanable(code: "MajoranaCode", M: Iterable[int]) -> tuple[bool, BitVector | None]:
    """(cleanable, witness); the witness is a logical operator supported on M."""
    res = region_logicals(code, M)
    return res.cleanable, res.witness


# ---------------------------------------------------------------------------
# exact minimum diameter of an even logical operator


class EvenDiameter(NamedTuple):
    value: int | None
    exact: bool
    witness: BitVector | None


def _axis_windows(layout: Layout, values: list[int], axis: int, t: int,
                  clique_cap: int) -> tuple[list[frozenset[int]], bool]:
    """Maximal value sets on one axis whose pairwise spread is at most t."""
    if not layout.periodic[axis]:
        wins = {frozenset(v for v in values if a <= v <= a + t) for a in values}
        return _maximal(wins), True
    g = nx.Graph()
    g.add_nodes_from(values)
    for i, a in enumerate(values):
        for b in values[i + 1:]:
            if layout.axis_distance(a, b, axis) <= t:
                g.add_edge(a, b)
    cliques = []
    for c in nx.find_cliques(g):
        cliques.append(frozenset(c))
        if len(cliques) > clique_cap:
            break
    else:
        return cliques, True
    # too many: fall back to arcs, which only gives an upper bound
    ext = layout.extent[axis]
    arcs = {frozenset(v for v in values if (v - a) % ext <= t) for a in values}
    return _maximal(arcs), False


def _maximal(sets: set[frozenset[int]]) -> list[frozenset[int]]:
    return [s for s in sets if not any(s < o for o in sets)]


def min_even_logical_diameter(code: "MajoranaCode", clique_cap: int = 5000) -> EvenDiameter:
    """Smallest diameter of a region supporting an even logical operator.

    Chebyshev diameter is the larger of the two per-axis spreads, so a support
    of diameter <= t+1 lies inside some product X x Y of maximal per-axis
    windows of spread <= t.  Testing those products for an even logical is
    linear algebra, and the predicate is monotone in t, so a bisection over t
    gives the exact minimum (unless the periodic-axis window count exceeds
    ``clique_cap``, in which case only arcs are tried and the value is an
    upper bound).
    """
    layout = _need_layout(code)
    m = code.modes
    everything = region_logicals(code, range(m))
    if everything.even is None:
        return EvenDiameter(None, True, None)

    values = [sorted({p[ax] for p in layout.positions}) for ax in (0, 1)]
    by_pos: dict[tuple[int, int], list[int]] = {}
    for u, p in enumerate(layout.positions):
        by_pos.setdefault(p, []).append(u)
    cache: dict[int, BitVector | None] = {}
    exact = True

    def probe(t: int) -> BitVector | None:
        nonlocal exact
        wx, ok_x = _axis_windows(layout, values[0], 0, t, clique_cap)
        wy, ok_y = _axis_windows(layout, values[1], 1, t, clique_cap)
        exact = exact and ok_x and ok_y
        best = None
        for X in wx:
            for Y in wy:
                region = [u for (x, y), us in by_pos.items() if x in X and y in Y for u in us]
                key = from_indices(region)
                if key not in cache:
                    cache[key] = region_logicals(code, region).even if region else None
                even = cache[key]
                if even is not None and (best is None or even.support() < best.support()):
                    best = even
        return best

    lo, hi = 0, layout.diameter(range(m)) - 1
    found = probe(hi)
    if found is None:  # only possible when the window family was truncated
        return EvenDiameter(hi + 1, False, everything.even)
    while lo < hi:
        mid = (lo + hi) // 2
        w = probe(mid)
        if w is not None:
            hi, found = mid, w
        else:
            lo = mid + 1
    return EvenDiameter(layout.diameter(found.support()), exact, found)


# ---------------------------------------------------------------------------
# strips


@dataclass(frozen=True)
class StripPartition:
    strips: tuple[tuple[int, ...], ...]
    axis: int
    bounds: tuple[tuple[int, int], ...]  # inclusive coordinate band of each strip
    widths: tuple[int, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.strips)


def make_strips(layout: Layout, axis: int | str, width: int, force: bool = False) -> StripPartition:
    """Cut the layout into contiguous bands of ``width`` coordinate units.

    The last band absorbs the remainder.  Periodic axes are refused unless
    ``force`` is set.
    """
    ax = AXES[axis]
    if width < 1:
        raise ValueError("strip width must be at least 1")
    if layout.periodic[ax] and not force:
        raise ValueError(f"axis {axis} is periodic; pass force=True to cut it anyway")
    if layout.periodic[ax]:
        lo, total = 0, layout.extent[ax]
    else:
        lo, hi = layout.bounds(ax)
        total = hi - lo + 1
    count = total // width
    if count < 1:
        raise WidthExceedsLattice(f"width {width} exceeds lattice extent {total}")
    bounds = []
    for i in range(count):
        a = lo + i * width
        b = lo + total - 1 if i == count - 1 else a + width - 1
        bounds.append((a, b))
    strips = []
    for a, b in bounds:
        strips.append(tuple(u for u, p in enumerate(layout.positions) if a <= _coord(layout, p, ax) <= b))
    return StripPartition(tuple(strips), ax, tuple(bounds), tuple(b - a + 1 for a, b in bounds))


def _coord(layout: Layout, p: tuple[int, int], ax: int) -> int:
    return p[ax] % layout.extent[ax] if layout.periodic[ax] else p[ax]


@dataclass
class StripVerdict:
    """Outcome of the strip analysis.

    ``even`` is (strip, support) for an even logical inside one strip;
    ``odd_pair`` is ((strip_i, support_i), (strip_j, support_j)) for two odd
    logicals in distinct strips.  At least one of them is set.
    """
    even: tuple[int, list[int]] | None
    odd_pair: tuple[tuple[int, list[int]], tuple[int, list[int]]] | None
    generator_diameter: int
    uncleanable: list[int]

    @property
    def cases(self) -> list[str]:
        return [c for c, w in (("i", self.even), ("ii", self.odd_pair)) if w is not None]


def strip_lemma_analysis(code: "MajoranaCode", partition: StripPartition,
                         refine: int = 8) -> StripVerdict:
    """Find an even logical in one strip, or odd logicals in two strips.

    When every strip is at least as wide as the largest generator, one of the
    two must exist; finding neither raises InconsistencyDetected.
    """
    diam = generator_diameter(code)
    if partition.widths and min(partition.widths) < diam:
        raise StripsTooNarrow(f"strip width {min(partition.widths)} < generator diameter {diam}")
    if code.logical_modes < 2:
        # the argument needs some even logical, which a half-qubit code lacks
        raise NoLogicals(f"{code.logical_modes} logical mode(s): need at least 2 for an even logical")
    even, odds, unclean = None, [], []
    for i, strip in enumerate(partition.strips):
        res = region_logicals(code, strip, refine=refine)
        if res.cleanable:
            continue
        unclean.append(i)
        if even is None and res.even is not None:
            even = (i, res.even.support())
        if res.odd is not None:
            odds.append((i, res.odd.support()))
    pair = (odds[0], odds[1]) if len(odds) >= 2 else None
    if even is None and pair is None:
        raise InconsistencyDetected("no even logical in a strip and no pair of odd logicals")
    return StripVerdict(even, pair, diam, unclean)
