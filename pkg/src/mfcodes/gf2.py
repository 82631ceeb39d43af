"""Bit-packed linear algebra over GF(2).

Vectors are Python ints: bit ``i`` holds coordinate ``i``.  Strings such as
``"1100"`` list coordinates left to right, so ``"1100"`` has support {0, 1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, NamedTuple, Sequence


def popcount(v: int) -> int:
    return bin(v).count("1")


def indices(v: int) -> list[int]:
    """Positions of the set bits of ``v`` in increasing order."""
    out = []
    while v:
        low = v & -v
        out.append(low.bit_length() - 1)
        v ^= low
    return out


def from_indices(idx: Iterable[int]) -> int:
    v = 0
    for i in idx:
        v ^= 1 << i
    return v


@dataclass(frozen=True)
class BitVector:
    bits: int
    length: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("negative length")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"bits do not fit in length {self.length}")

    @classmethod
    def from_indices(cls, idx: Iterable[int], length: int) -> "BitVector":
        return cls(from_indices(idx), length)

    @classmethod
    def from_str(cls, s: str) -> "BitVector":
        s = s.strip()
        if set(s) - {"0", "1"}:
            raise ValueError(f"not a binary string: {s!r}")
        return cls(from_indices(i for i, c in enumerate(s) if c == "1"), len(s))

    @classmethod
    def zeros(cls, length: int) -> "BitVector":
        return cls(0, length)

    @property
    def weight(self) -> int:
        return popcount(self.bits)

    def support(self) -> list[int]:
        return indices(self.bits)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __len__(self) -> int:
        return self.length

    def __xor__(self, other: "BitVector") -> "BitVector":
        _check_len(self.length, other.length)
        return BitVector(self.bits ^ other.bits, self.length)

    __add__ = __xor__

    def dot(self, other: "BitVector") -> int:
        _check_len(self.length, other.length)
        return popcount(self.bits & other.bits) & 1

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.length))


@dataclass(frozen=True)
class BitMatrix:
    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        for r in self.rows:
            if r < 0 or r >> self.ncols:
                raise ValueError(f"row does not fit in {self.ncols} columns")

    @classmethod
    def from_vectors(cls, vecs: Iterable[BitVector], ncols: int) -> "BitMatrix":
        rows = []
        for v in vecs:
            _check_len(ncols, v.length)
            rows.append(v.bits)
        return cls(tuple(rows), ncols)

    @classmethod
    def from_strings(cls, lines: Iterable[str]) -> "BitMatrix":
        vecs = [BitVector.from_str(s) for s in lines]
        if not vecs:
            raise ValueError("need at least one row to infer the width; use BitMatrix((), m)")
        return cls.from_vectors(vecs, vecs[0].length)

    @classmethod
    def from_supports(cls, supports: Iterable[Iterable[int]], ncols: int) -> "BitMatrix":
        return cls(tuple(from_indices(s) for s in supports), ncols)

    @classmethod
    def empty(cls, ncols: int) -> "BitMatrix":
        return cls((), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[BitVector]:
        return (BitVector(r, self.ncols) for r in self.rows)

    def row(self, i: int) -> BitVector:
        return BitVector(self.rows[i], self.ncols)

    def supports(self) -> list[list[int]]:
        return [indices(r) for r in self.rows]

    def stack(self, other: "BitMatrix") -> "BitMatrix":
        _check_len(self.ncols, other.ncols)
        return BitMatrix(self.rows + other.rows, self.ncols)

    def __str__(self) -> str:
        return "\n".join(str(v) for v in self)


def _check_len(a: int, b: int) -> None:
    if a != b:
        raise ValueError(f"dimension mismatch: {a} != {b}")


class Echelon:
    """Incrementally built reduced row echelon form.

    Pivots are the lowest set bit of each row, and every pivot bit is cleared
    from all other rows, so ``reduce`` is a single pass over the pivots.
    """

    def __init__(self, rows: Iterable[int] = ()):
        self.pivots: dict[int, int] = {}  # pivot bit (as a power of two) -> row
        for r in rows:
            self.add(r)

    def reduce(self, v: int) -> int:
        for p, row in self.pivots.items():
            if v & p:
                v ^= row
        return v

    def add(self, v: int) -> bool:
        """Insert ``v``; return False if it was already in the span."""
        v = self.reduce(v)
        if not v:
            return False
        p = v & -v
        for q, row in self.pivots.items():
            if row & p:
                self.pivots[q] = row ^ v
        self.pivots[p] = v
        return True

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0

    def __len__(self) -> int:
        return len(self.pivots)

    def basis(self) -> list[int]:
        """Rows sorted by pivot position."""
        return [self.pivots[p] for p in sorted(self.pivots)]


def rank(M: BitMatrix) -> int:
    return len(Echelon(M.rows))


def row_basis(M: BitMatrix) -> BitMatrix:
    """An independent set of rows spanning rowspace(M), in reduced form."""
    return BitMatrix(tuple(Echelon(M.rows).basis()), M.ncols)


def kernel_basis(M: BitMatrix) -> BitMatrix:
    """Basis of {v : M v = 0}, one vector per free column in increasing order."""
    ech = Echelon(M.rows)
    pivot_of_col = {p.bit_length() - 1: row for p, row in ech.pivots.items()}
    out = []
    for f in range(M.ncols):
        if f in pivot_of_col:
            continue
        fb = 1 << f
        v = fb
        for c, row in pivot_of_col.items():
            if row & fb:
                v |= 1 << c
        out.append(v)
    return BitMatrix(tuple(out), M.ncols)


def orthogonal_complement(M: BitMatrix) -> BitMatrix:
    # Under the standard dot product the complement of rowspace(M) is ker(M).
    return kernel_basis(M)


def in_span(v: BitVector, M: BitMatrix) -> bool:
    _check_len(v.length, M.ncols)
    return v.bits in Echelon(M.rows)


def compress(v: int, coords: Sequence[int]) -> int:
    """Restrict ``v`` to ``coords``; bit j of the result is bit coords[j] of v."""
    out = 0
    for j, c in enumerate(coords):
        if (v >> c) & 1:
            out |= 1 << j
    return out


def expand(v: int, coords: Sequence[int]) -> int:
    """Inverse of :func:`compress`: place bit j of ``v`` at coordinate coords[j]."""
    out = 0
    for j, c in enumerate(coords):
        if (v >> j) & 1:
            out |= 1 << c
    return out


def project(M: BitMatrix, coords: Iterable[int]) -> BitMatrix:
    """Basis of rowspace(M) restricted to ``coords`` (sorted), as |coords|-bit vectors."""
    cs = sorted(set(coords))
    for c in cs:
        if not 0 <= c < M.ncols:
            raise ValueError(f"coordinate {c} out of range")
    ech = Echelon(compress(r, cs) for r in M.rows)
    return BitMatrix(tuple(ech.basis()), len(cs))


def span_within(M: BitMatrix, coords: Iterable[int]) -> BitMatrix:
    """Basis of rowspace(M) intersected with the vectors supported on ``coords``.

    Elimination pivots only on the coordinates outside ``coords``; rows whose
    outside part cancels completely are exactly the combinations we want.
    """
    inside = from_indices(set(coords))
    outside_mask = ((1 << M.ncols) - 1) & ~inside
    pivots: dict[int, int] = {}
    found = Echelon()
    for r in Echelon(M.rows).basis():
        for p, row in pivots.items():
            if r & p:
                r ^= row
        out = r & outside_mask
        if out:
            pivots[out & -out] = r
        elif r:
            found.add(r)
    return BitMatrix(tuple(found.basis()), M.ncols)


# ---------------------------------------------------------------------------
# minimum-weight coset search


class MinWeight(NamedTuple):
    weight: int
    vector: BitVector


def _site_options(sites: Sequence[Sequence[int]]) -> list[list[int]]:
    """All nonzero bit patterns a site can carry."""
    out = []
    for coords in sites:
        opts = []
        for pattern in product((0, 1), repeat=len(coords)):
            if any(pattern):
                opts.append(from_indices(c for c, b in zip(coords, pattern) if b))
        out.append(opts)
    return out


class CosetSearch:
    """Weight-ordered search for vectors of rowspace(kernel) outside rowspace(span).

    Weight counts *sites*: by default each coordinate is a site, but a site may
    group several coordinates (one qubit = its x and z bits) so that weight
    becomes support size.  Weight ``w`` is searched meet-in-the-middle: the
    first ``ceil(w/2)`` sites are enumerated lazily and matched by syndrome
    against a table of the last ``floor(w/2)`` sites.  Each vector is produced
    exactly once because the left half must lie strictly before the right.
    """

    def __init__(self, kernel: BitMatrix, span: BitMatrix,
                 sites: Sequence[Sequence[int]] | None = None,
                 parity: str | None = None):
        _check_len(kernel.ncols, span.ncols)
        if parity not in (None, "even", "odd"):
            raise ValueError(f"parity filter must be None, 'even' or 'odd', not {parity!r}")
        m = kernel.ncols
        if sites is None:
            sites = [(i,) for i in range(m)]
        covered = sorted(c for s in sites for c in s)
        if covered != list(range(m)):
            raise ValueError("sites must partition the coordinates")
        kernel_ech = Echelon(kernel.rows)
        for r in span.rows:
            if r not in kernel_ech:
                raise ValueError("rowspace(span) is not contained in rowspace(kernel)")
        self.m = m
        self.parity = parity
        self.span = Echelon(span.rows)
        # A vector lies in rowspace(kernel) iff it is orthogonal to every check.
        checks = kernel_basis(BitMatrix(tuple(kernel_ech.basis()), m)).rows
        self.sites = [tuple(s) for s in sites]
        self.options = []
        for opts in _site_options(self.sites):
            self.options.append([(v, _syndrome(v, checks)) for v in opts])
        self._tables: dict[int, dict[int, list[tuple[int, tuple[int, ...], int]]]] = {}

    def _accept(self, v: int) -> bool:
        if self.parity is not None and (popcount(v) & 1) != (self.parity == "odd"):
            return False
        return self.span.reduce(v) != 0

    def _assignments(self, size: int) -> Iterator[tuple[tuple[int, ...], int, int]]:
        opts = self.options
        for combo in combinations(range(len(opts)), size):
            for choice in product(*(opts[s] for s in combo)):
                v = syn = 0
                for cv, cs in choice:
                    v ^= cv
                    syn ^= cs
                yield combo, v, syn

    def _table(self, size: int):
        if size not in self._tables:
            table: dict[int, list[tuple[int, tuple[int, ...], int]]] = {}
            for combo, v, syn in self._assignments(size):
                first = combo[0] if combo else len(self.options)
                table.setdefault(syn, []).append((first, combo, v))
            self._tables[size] = table
        return self._tables[size]

    def solutions(self, w: int) -> list[tuple[tuple[int, ...], int]]:
        """Every accepted vector touching exactly ``w`` sites, as (sites, vector)."""
        right = self._table(w // 2)
        found = []
        for combo, v, syn in self._assignments(w - w // 2):
            bucket = right.get(syn)
            if not bucket:
                continue
            last = combo[-1] if combo else -1
            for first, rcombo, rv in bucket:
                if first > last:
                    u = v ^ rv
                    if self._accept(u):
                        found.append((combo + rcombo, u))
        return found

    def run(self, max_weight: int | None = None, collect_all: bool = False):
        """Smallest weight with an accepted vector, searching 1..max_weight.

        Returns ``(weight, solutions)`` with solutions sorted by (sites, vector),
        or None if nothing was found within the bound.
        """
        if max_weight is None:
            max_weight = len(self.sites)
        for w in range(1, min(max_weight, len(self.sites)) + 1):
            sols = self.solutions(w)
            if sols:
                sols.sort()
                return w, (sols if collect_all else sols[:1])
        return None


def _syndrome(v: int, checks: Sequence[int]) -> int:
    s = 0
    for j, c in enumerate(checks):
        if popcount(v & c) & 1:
            s |= 1 << j
    return s


def min_weight_not_in_span(kernel: BitMatrix, span: BitMatrix, max_weight: int | None = None,
                           parity: str | None = None,
                           sites: Sequence[Sequence[int]] | None = None) -> MinWeight | None:
    """Minimum-weight vector of rowspace(kernel) \\ rowspace(span).

    ``parity`` restricts to even or odd Hamming weight.  Returns None when no
    such vector has weight <= max_weight (the search is then *exhausted*, not
    inconclusive about smaller weights: any result found is globally minimal).
    Ties go to the lexicographically smallest support.
    """
    res = CosetSearch(kernel, span, sites=sites, parity=parity).run(max_weight)
    if res is None:
        return None
    w, sols = res
    return MinWeight(w, BitVector(sols[0][1], kernel.ncols))


def enumerate_span(M: BitMatrix) -> Iterator[int]:
    """Every vector of rowspace(M) (2**rank of them), Gray-code order."""
    basis = Echelon(M.rows).basis()
    v = 0
    yield v
    for i in range(1, 1 << len(basis)):
        v ^= basis[(i & -i).bit_length() - 1]
        yield v
