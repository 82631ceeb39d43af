"""Search random Majorana codes for symplectic logical bases made only of odd operators.

A code with an odd logical always has an all-odd *generating set* of the
logical group: multiply every even basis element by the odd one.  Whether
the pairs can also be made canonical (each X_j anticommuting only with its
own Z_j) is a different question, answered here by exhaustive search over
logical classes.
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from mfcodes.gf2 import BitMatrix, Echelon, popcount
from mfcodes.majorana import MajoranaCode, k_odd, majorana_form


@dataclass
class OddBasisConfig:
    samples: int = 300
    max_modes: int = 10
    seed: int = 1


def random_code(rng: random.Random, m: int) -> MajoranaCode:
    rows, span = [], Echelon()
    for _ in range(3 * m):
        v = rng.getrandbits(m)
        if v and popcount(v) % 2 == 0 and all(majorana_form(v, r) == 0 for r in rows) and span.add(v):
            rows.append(v)
        if rng.random() < 0.15:
            break
    return MajoranaCode(m, BitMatrix(tuple(rows), m))


def logical_classes(code: MajoranaCode) -> list[int]:
    """One canonical representative per nontrivial logical class."""
    stab = code.stabilizer_span()
    basis = [stab.reduce(v) for v in code.centralizer().rows]
    reps = Echelon()
    for v in basis:
        reps.add(v)
    gens = [v for v in reps.basis() if v]
    out = set()
    for mask in range(1, 1 << len(gens)):
        v = 0
        for i, g in enumerate(gens):
            if mask >> i & 1:
                v ^= g
        out.add(stab.reduce(v))
    out.discard(0)
    return sorted(out)


def odd_symplectic_basis(classes: list[int], pairs: int):
    odd = [v for v in classes if popcount(v) % 2]

    def search(chosen, remaining):
        if remaining == 0:
            return chosen
        for i, x in enumerate(odd):
            if any(majorana_form(x, c) for c in chosen):
                continue
            for z in odd[i + 1:]:
                if majorana_form(x, z) and not any(majorana_form(z, c) for c in chosen):
                    span = Echelon(chosen)
                    if span.add(x) and span.add(z):
                        got = search(chosen + [x, z], remaining - 1)
                        if got:
                            return got
        return None

    return search([], pairs)


def run(cfg: OddBasisConfig):
    rng = random.Random(cfg.seed)
    tally = Counter()
    for _ in range(cfg.samples):
        code = random_code(rng, rng.randint(2, cfg.max_modes))
        lm = code.logical_modes
        if lm < 2 or lm % 2:
            tally["skipped (fewer than one logical qubit)"] += 1
            continue
        key = f"k_odd={k_odd(code)}"
        found = odd_symplectic_basis(logical_classes(code), lm // 2)
        tally[f"{key}, all-odd symplectic basis {'found' if found else 'absent'}"] += 1
    for k, v in sorted(tally.items()):
        print(f"{v:5d}  {k}")
    return tally


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=300)
    ap.add_argument("--max-modes", type=int, default=10)
    ap.add_argument("--seed", type=int, default=1)
    a = ap.parse_args()
    run(OddBasisConfig(a.samples, a.max_modes, a.seed))


if __name__ == "__main__":
    main()
