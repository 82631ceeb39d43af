"""Qubit stabilizer codes in the binary symplectic picture (phases dropped)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import IllegalCharacter, LengthMismatch, NonCommutingGenerators, NoLogicalQubits
from .gf2 import BitMatrix, BitVector, CosetSearch, Echelon, MinWeight, kernel_basis, popcount

_CHARS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}


@dataclass(frozen=True)
class PauliOperator:
    x: int
    z: int
    n: int

    @classmethod
    def from_str(cls, s: str) -> "PauliOperator":
        x = z = 0
        for i, ch in enumerate(s):
            try:
                xb, zb = _CHARS[ch.upper()]
            except KeyError:
                raise IllegalCharacter(f"illegal Pauli character {ch!r} at position {i}") from None
            x |= xb << i
            z |= zb << i
        return cls(x, z, len(s))

    @classmethod
    def from_symplectic(cls, v: int, n: int) -> "PauliOperator":
        mask = (1 << n) - 1
        return cls(v & mask, v >> n, n)

    @property
    def symplectic(self) -> int:
        """Packed (x|z) vector: x in bits 0..n-1, z in bits n..2n-1."""
        return self.x | (self.z << self.n)

    @property
    def weight(self) -> int:
        return popcount(self.x | self.z)

    def support(self) -> list[int]:
        return BitVector(self.x | self.z, self.n).support()

    def commutes(self, other: "PauliOperator") -> bool:
        return popcount((self.x & other.z) ^ (self.z & other.x)) % 2 == 0

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        return PauliOperator(self.x ^ other.x, self.z ^ other.z, self.n)

    def __str__(self) -> str:
        out = []
        for i in range(self.n):
            out.append("IXZY"[((self.x >> i) & 1) | (((self.z >> i) & 1) << 1)])
        return "".join(out)


@dataclass(frozen=True)
class StabilizerCode:
    n: int
    generators: tuple[PauliOperator, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if g.n != self.n:
                raise LengthMismatch(f"generator {g} has length {g.n}, expected {self.n}")
        gens = self.generators
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                if not gens[i].commutes(gens[j]):
                    raise NonCommutingGenerators(i, j)

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "StabilizerCode":
        if not lines:
            raise LengthMismatch("need at least one generator")
        gens = [PauliOperator.from_str(s) for s in lines]
        n = gens[0].n
        for i, g in enumerate(gens):
            if g.n != n:
                raise LengthMismatch(f"line {i} has length {g.n}, expected {n}")
        return cls(n, tuple(gens))

    def to_strings(self) -> list[str]:
        return [str(g) for g in self.generators]

    def check_matrix(self) -> BitMatrix:
        return BitMatrix(tuple(g.symplectic for g in self.generators), 2 * self.n)

    @property
    def rank(self) -> int:
        return len(Echelon(g.symplectic for g in self.generators))

    @property
    def k(self) -> int:
        return self.n - self.rank

    def centralizer(self) -> BitMatrix:
        """Basis of the symplectic complement: Paulis commuting with every generator."""
        n, mask = self.n, (1 << self.n) - 1
        swapped = tuple((g.z) | ((g.x & mask) << n) for g in self.generators)
        return kernel_basis(BitMatrix(swapped, 2 * n))


def parse_pauli_code(text: str | Iterable[str]) -> StabilizerCode:
    """Parse the ``.stab`` format: one Pauli string per line, ``#`` comments."""
    lines = text.splitlines() if isinstance(text, str) else list(text)
    gens = [ln.strip() for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    return StabilizerCode.from_strings(gens)


def format_pauli_code(code: StabilizerCode, comment: str | None = None) -> str:
    out = [f"# {ln}" for ln in (comment.splitlines() if comment else [])]
    out += code.to_strings()
    return "\n".join(out) + "\n"


def qubit_sites(n: int) -> list[tuple[int, int]]:
    return [(i, i + n) for i in range(n)]


def min_weight_logical(code: StabilizerCode, max_weight: int | None = None) -> MinWeight | None:
    if code.k == 0:
        raise NoLogicalQubits("code encodes no logical qubits")
    search = CosetSearch(code.centralizer(), code.check_matrix(), sites=qubit_sites(code.n))
    res = search.run(max_weight)
    if res is None:
        return None
    w, sols = res
    return MinWeight(w, BitVector(sols[0][1], 2 * code.n))


def qubit_distance(code: StabilizerCode, max_weight: int | None = None) -> int | None:
    """Minimum support size over C(S) \\ S, or None if none up to ``max_weight``."""
    res = min_weight_logical(code, max_weight)
    return None if res is None else res.weight


def css_parts(code: StabilizerCode) -> tuple[BitMatrix, BitMatrix] | None:
    """(C_X, C_Z) generator matrices if every generator is pure X or pure Z."""
    xs, zs = [], []
    for g in code.generators:
        if g.x and g.z:
            return None
        if g.x:
            xs.append(g.x)
        elif g.z:
            zs.append(g.z)
    return BitMatrix(tuple(xs), code.n), BitMatrix(tuple(zs), code.n)


def is_weakly_self_dual_css(code: StabilizerCode) -> bool:
    parts = css_parts(code)
    if parts is None:
        return False
    cx, cz = parts
    ex, ez = Echelon(cx.rows), Echelon(cz.rows)
    return len(ex) == len(ez) and all(r in ex for r in cz.rows)
