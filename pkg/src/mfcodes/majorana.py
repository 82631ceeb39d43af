"""Majorana fermion codes as GF(2) support matrices.

A code on m modes is a matrix whose rows are generator supports.  Valid codes
have even rows with pairwise even overlap; the centralizer is then the plain
GF(2) kernel of the generator matrix, since an even stabilizer commutes with
c_A exactly when the overlap is even.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .errors import NoLogicals, OddLogicalModeCount
from .geometry import Layout, _need_layout, generator_diameter, min_even_logical_diameter
from .gf2 import (BitMatrix, BitVector, CosetSearch, Echelon, MinWeight, from_indices, indices,
                  kernel_basis, popcount)


@dataclass(frozen=True)
class MajoranaOperator:
    support: int
    modes: int

    @classmethod
    def from_indices(cls, idx, modes: int) -> "MajoranaOperator":
        return cls(from_indices(idx), modes)

    @property
    def weight(self) -> int:
        return popcount(self.support)

    @property
    def parity(self) -> int:
        return self.weight & 1

    @property
    def is_even(self) -> bool:
        return self.parity == 0

    def indices(self) -> list[int]:
        return indices(self.support)

    def commutes(self, other: "MajoranaOperator") -> bool:
        return majorana_form(self.support, other.support) == 0

    def __mul__(self, other: "MajoranaOperator") -> "MajoranaOperator":
        return MajoranaOperator(self.support ^ other.support, self.modes)

    def __str__(self) -> str:
        return " ".join(f"c{u + 1}" for u in self.indices()) or "I"


def majorana_form(a: int, b: int) -> int:
    """1 iff c_A and c_B anti-commute: |A||B| + |A n B| mod 2."""
    return (popcount(a) * popcount(b) + popcount(a & b)) & 1


@dataclass(frozen=True)
class MajoranaCode:
    modes: int
    generators: BitMatrix
    layout: Layout | None = None

    def __post_init__(self):
        if self.generators.ncols != self.modes:
            raise ValueError(f"generator width {self.generators.ncols} != {self.modes} modes")

    @classmethod
    def from_supports(cls, supports, modes: int, layout: Layout | None = None) -> "MajoranaCode":
        return cls(modes, BitMatrix.from_supports(supports, modes), layout)

    @property
    def rank(self) -> int:
        return len(Echelon(self.generators.rows))

    @property
    def logical_modes(self) -> int:
        return self.modes - 2 * self.rank

    @property
    def k(self) -> Fraction:
        return Fraction(self.logical_modes, 2)

    def centralizer(self) -> BitMatrix:
        return kernel_basis(self.generators)

    def stabilizer_span(self) -> Echelon:
        return Echelon(self.generators.rows)


class Violation(NamedTuple):
    kind: str  # "odd-weight" or "odd-overlap"
    rows: tuple[int, ...]
    detail: str


def validate(code: MajoranaCode) -> list[Violation]:
    """Every odd-weight row and every odd-overlap row pair; empty means valid."""
    rows = code.generators.rows
    out = []
    for i, r in enumerate(rows):
        if popcount(r) & 1:
            out.append(Violation("odd-weight", (i,), f"row {i} has weight {popcount(r)}"))
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            ov = popcount(rows[i] & rows[j])
            if ov & 1:
                out.append(Violation("odd-overlap", (i, j), f"rows {i},{j} overlap in {ov} modes"))
    return out


def count_logicals(code: MajoranaCode) -> tuple[int, Fraction]:
    return code.logical_modes, code.k


def k_odd(code: MajoranaCode) -> int:
    """1 iff some logical operator has odd weight, i.e. the all-modes parity is not a stabilizer."""
    all_ones = (1 << code.modes) - 1
    return 0 if all_ones in code.stabilizer_span() else 1


def _require_logicals(code: MajoranaCode) -> None:
    if code.logical_modes < 1:
        raise NoLogicals("code has no logical operators")


def min_weight_logical(code: MajoranaCode, max_weight: int | None = None,
                       parity: str | None = None) -> MinWeight | None:
    _require_logicals(code)
    res = CosetSearch(code.centralizer(), code.generators, parity=parity).run(max_weight)
    if res is None:
        return None
    w, sols = res
    return MinWeight(w, BitVector(sols[0][1], code.modes))


def min_weight_logicals(code: MajoranaCode, max_weight: int | None = None,
                        parity: str | None = None) -> tuple[int, list[BitVector]] | None:
    """Every logical operator of minimum weight (lexicographic order)."""
    _require_logicals(code)
    res = CosetSearch(code.centralizer(), code.generators, parity=parity).run(max_weight, collect_all=True)
    if res is None:
        return None
    w, sols = res
    return w, [BitVector(v, code.modes) for _, v in sols]


def distance(code: MajoranaCode, max_weight: int | None = None) -> int | None:
    """Minimum weight of a logical operator; None if none up to ``max_weight``."""
    res = min_weight_logical(code, max_weight)
    return None if res is None else res.weight


def l_even(code: MajoranaCode):
    """Minimum diameter of an even logical operator (see geometry for the convention).

    Returns an ``EvenDiameter`` whose value is None when the code has no even
    logical operator at all.
    """
    _need_layout(code)
    _require_logicals(code)
    return min_even_logical_diameter(code)


def canonical_logical_basis(code: MajoranaCode) -> list[tuple[MajoranaOperator, MajoranaOperator]]:
    """Symplectic logical basis [(X1, Z1), (X2, Z2), ...].

    When the code has odd logicals, Z1 is the total parity operator (reduced
    modulo stabilizers) and X1 is odd; all other operators are then even
    because they commute with Z1.
    """
    if code.logical_modes % 2:
        raise OddLogicalModeCount(f"{code.logical_modes} logical modes: no full qubit basis")
    _require_logicals(code)
    m = code.modes
    stab = code.stabilizer_span()
    pool = list(code.centralizer().rows)
    pairs: list[tuple[int, int]] = []

    def split_off(a: int, b: int) -> None:
        pairs.append((a, b))
        for i, v in enumerate(pool):
            pool[i] = v ^ (b if majorana_form(v, a) else 0) ^ (a if majorana_form(v, b) else 0)

    if k_odd(code):
        z1 = stab.reduce((1 << m) - 1)
        x1 = next(v for v in pool if popcount(v) & 1)
        pool.remove(x1)
        split_off(x1, z1)
    while pool:
        a = pool.pop(0)
        if a in stab:
            continue
        j = next((i for i, v in enumerate(pool) if majorana_form(a, v)), None)
        if j is None:
            raise AssertionError("degenerate form on the logical space")  # pragma: no cover
        b = pool.pop(j)
        split_off(a, b)
    if 2 * len(pairs) != code.logical_modes:  # pragma: no cover
        raise AssertionError("basis size mismatch")
    return [(MajoranaOperator(a, m), MajoranaOperator(b, m)) for a, b in pairs]


def split_components(code: MajoranaCode, support: list[int], separation: int) -> list[list[int]]:
    """Group modes of ``support`` whose layout distance is below ``separation``."""
    layout = _need_layout(code)
    comps: list[list[int]] = []
    seen = set()
    for start in support:
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in support:
                if v not in seen and layout.distance(u, v) < separation:
                    seen.add(v)
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def min_logical_connected(code: MajoranaCode, max_weight: int | None = None) -> bool:
    """True iff some minimum-weight logical cannot be split into far-apart pieces.

    Two pieces count as far apart when every cross pair is at least the
    generator diameter away, so no generator can touch both.
    """
    _need_layout(code)
    r = generator_diameter(code)
    res = min_weight_logicals(code, max_weight)
    if res is None:
        raise NoLogicals(f"no logical operator up to weight {max_weight}")
    _, vecs = res
    return any(len(split_components(code, v.support(), r)) == 1 for v in vecs)


@dataclass
class AnalysisReport:
    modes: int
    rank: int
    logical_modes: int
    k: Fraction
    k_odd: int
    distance: int | None
    search_bound: int | None
    l_even: int | None
    l_even_exact: bool | None
    witnesses: list[list[int]] = field(default_factory=list)
    l_even_witness: list[int] | None = None
    violations: list[str] = field(default_factory=list)

    @property
    def exhausted(self) -> bool:
        return self.distance is None and self.logical_modes > 0

    def to_dict(self) -> dict:
        if self.logical_modes == 0:
            dist = "not-applicable"
        else:
            dist = "exhausted" if self.distance is None else self.distance
        if self.l_even is None:
            le = "not-applicable" if self.l_even_exact is None else "no-even-logical"
        else:
            le = self.l_even
        return {
            "modes": self.modes,
            "rank": self.rank,
            "logical_modes": self.logical_modes,
            "k": f"{self.k.numerator}/{self.k.denominator}",
            "k_odd": self.k_odd,
            "distance": dist,
            "search_bound": self.search_bound,
            "l_even": le,
            "l_even_exact": self.l_even_exact,
            "l_even_witness": self.l_even_witness,
            "witnesses": self.witnesses,
        }

    def to_json(self, sort_keys: bool = True) -> str:
        return json.dumps(self.to_dict(), sort_keys=sort_keys, indent=2)


def default_max_weight(modes: int) -> int:
    return modes if modes <= 20 else 6


def analyze(code: MajoranaCode, max_weight: int | None = None) -> AnalysisReport:
    """Rank, logical count, k_odd, distance (with witnesses) and l_even."""
    if max_weight is None:
        max_weight = default_max_weight(code.modes)
    lm, k = count_logicals(code)
    dist, witnesses = None, []
    le = le_exact = le_wit = None
    if lm > 0:
        res = min_weight_logicals(code, max_weight)
        if res is not None:
            dist = res[0]
            witnesses = [v.support() for v in res[1]]
        if code.layout is not None:
            ev = l_even(code)
            le, le_exact = ev.value, ev.exact
            le_wit = ev.witness.support() if ev.witness is not None else None
    return AnalysisReport(code.modes, code.rank, lm, k, k_odd(code), dist, max_weight,
                          le, le_exact, witnesses, le_wit)
