"""Push a qubit code through the qubit-to-Majorana map and then through doubling.

With no arguments this runs the Steane code; pass a .stab file to use another
code.  Prints parameters at each stage.
"""

import argparse
import time
from dataclasses import dataclass

from mfcodes.catalog import steane
from mfcodes.majorana import distance
from mfcodes.maps import double, stabilizer_to_majorana
from mfcodes.pauli import is_weakly_self_dual_css, parse_pauli_code, qubit_distance


@dataclass
class PipelineConfig:
    stab_file: str | None = None
    max_weight: int | None = None


def run(cfg: PipelineConfig):
    if cfg.stab_file:
        with open(cfg.stab_file) as fh:
            code = parse_pauli_code(fh.read())
    else:
        code = steane()
    t0 = time.perf_counter()
    d0 = qubit_distance(code, cfg.max_weight)
    print(f"input      [[{code.n},{code.k},{d0}]]")
    maj = stabilizer_to_majorana(code)
    d1 = distance(maj, cfg.max_weight)
    print(f"majorana   modes={maj.modes} k={maj.k} d={d1}")
    css = double(maj)
    d2 = qubit_distance(css, cfg.max_weight)
    print(f"doubled    [[{css.n},{css.k},{d2}]] weakly self-dual CSS: {is_weakly_self_dual_css(css)}")
    print(f"elapsed    {time.perf_counter() - t0:.2f}s")
    return d0, d1, d2


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("stab_file", nargs="?")
    ap.add_argument("--max-weight", type=int)
    a = ap.parse_args()
    run(PipelineConfig(a.stab_file, a.max_weight))


if __name__ == "__main__":
    main()
