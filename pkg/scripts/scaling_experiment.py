"""Distance and even-logical diameter of the cut color-code cylinders.

    python3 scripts/scaling_experiment.py --R 3 5 7 --L 1 2 3 --out scaling.csv
"""

import argparse
import time
from dataclasses import dataclass, field

from mfcodes.color_code import CSV_HEADER, scaling_experiment


@dataclass
class ScalingConfig:
    R: list = field(default_factory=lambda: [3, 5])
    L: list = field(default_factory=lambda: [1, 2, 3])
    max_weight: int | None = None
    mode_cap: int = 200
    out: str | None = None


def run(cfg: ScalingConfig):
    t0 = time.perf_counter()
    rows = scaling_experiment(cfg.R, cfg.L, cfg.max_weight, cfg.mode_cap)
    lines = [CSV_HEADER] + [r.csv() for r in rows]
    text = "\n".join(lines) + "\n"
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    print(text, end="")
    for R in cfg.R:
        sub = [r for r in rows if r.R == R]
        ls = [r.l_even for r in sub]
        print(f"# R={R}: l_even over L = {ls}, min odd weight = {sorted({r.min_odd_weight for r in sub})}")
    print(f"# {len(rows)} instances in {time.perf_counter() - t0:.2f}s")
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--R", type=int, nargs="+", default=[3, 5])
    ap.add_argument("--L", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--max-weight", type=int)
    ap.add_argument("--mode-cap", type=int, default=200)
    ap.add_argument("--out")
    a = ap.parse_args()
    run(ScalingConfig(a.R, a.L, a.max_weight, a.mode_cap, a.out))


if __name__ == "__main__":
    main()
