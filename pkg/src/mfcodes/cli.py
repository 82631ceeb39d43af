"""Command-line interface: ``mfc build|analyze|map|clean|strips|scale``.

Exit codes: 0 success, 1 invalid code, 2 usage error.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import catalog, color_code, maps
from .errors import CodeError, NonCommutingGenerators
from .formats import FormatError, read_code, write_code
from .geometry import make_strips, region_logicals, strip_lemma_analysis
from .majorana import MajoranaCode, analyze, default_max_weight, validate
from .pauli import StabilizerCode, qubit_distance

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _load(path: str):
    p = Path(path)
    if not p.exists():
        raise UsageError(f"no such file: {path}")
    return read_code(p)


def _load_majorana(path: str) -> MajoranaCode:
    code = _load(path)
    if not isinstance(code, MajoranaCode):
        raise UsageError(f"{path} holds a qubit code; a .mfc Majorana code is needed")
    return code


def _check_majorana(code: MajoranaCode) -> bool:
    bad = validate(code)
    for v in bad:
        print(f"invalid: {v.detail}")
    return not bad


def _fmt(v) -> str:
    return "exhausted" if v is None else str(v)


# ---------------------------------------------------------------------------


def cmd_build(args) -> int:
    name = args.name
    if name == "color-cylinder":
        if args.R is None or args.L is None:
            raise UsageError("color-cylinder needs --R and --L")
        G = color_code.build_cylinder(args.R, args.L)
        code = color_code.face_code(G)
        part = color_code.partition_faces(G)
        comment = f"color-cylinder R={args.R} L={args.L}"
        print(f"|V| = {G.num_vertices}, |F0| = {len(part.F0)}, |F| = {len(G.faces)}")
        if args.surface_json:
            Path(args.surface_json).write_text(G.to_json() + "\n")
    else:
        params = {"kitaev-chain": [args.n], "hex-torus": [args.lx, args.ly]}.get(name, [])
        if any(p is None for p in params):
            need = {"kitaev-chain": "--n", "hex-torus": "--lx and --ly"}[name]
            raise UsageError(f"{name} needs {need}")
        code = catalog.catalog_build(name, *params)
        comment = f"{name}" + (f"({', '.join(map(str, params))})" if params else "")
    if isinstance(code, StabilizerCode):
        print(f"{comment}: {code.n} qubits, k = {code.k}")
    else:
        print(f"{comment}: {code.modes} modes, {len(code.generators.rows)} generators")
    if args.out:
        write_code(code, args.out, comment)
        print(f"wrote {args.out}")
    return EXIT_OK


def cmd_analyze(args) -> int:
    code = _load(args.input)
    if isinstance(code, StabilizerCode):
        mw = args.max_weight if args.max_weight is not None else default_max_weight(code.n)
        d = qubit_distance(code, mw) if code.k > 0 else None
        print(f"n = {code.n}, k = {code.k}, d = {_fmt(d) if code.k else 'not-applicable'}")
        return EXIT_OK
    if not _check_majorana(code):
        return EXIT_INVALID
    report = analyze(code, args.max_weight)
    if args.json:
        print(report.to_json(sort_keys=True))
        return EXIT_OK
    d = report.to_dict()
    for key in ("modes", "rank", "logical_modes", "k", "k_odd", "distance", "l_even"):
        print(f"{key:14s} {d[key]}")
    if report.l_even is not None and not report.l_even_exact:
        print("               (l_even is an upper bound)")
    for w in report.witnesses[: args.show]:
        print(f"witness        {w}")
    return EXIT_OK


def _summary(code) -> str:
    if isinstance(code, StabilizerCode):
        return f"[[{code.n}, {code.k}]]"
    return f"{code.modes} modes, k = {code.k}"


def cmd_map(args) -> int:
    kind = args.kind
    if kind == "product":
        if len(args.input) != 2:
            raise UsageError("product needs two --input files")
        a, b = (_load_majorana(p) for p in args.input)
        for c in (a, b):
            if not _check_majorana(c):
                return EXIT_INVALID
        out = maps.product(a, b, args.spacer)
        src = f"{_summary(a)} x {_summary(b)}"
    else:
        if len(args.input) != 1:
            raise UsageError(f"{kind} takes exactly one --input")
        code = _load(args.input[0])
        src = _summary(code)
        if kind == "qubit-to-majorana":
            if not isinstance(code, StabilizerCode):
                raise UsageError("qubit-to-majorana needs a .stab qubit code")
            out = maps.stabilizer_to_majorana(code)
        else:
            if not isinstance(code, MajoranaCode):
                raise UsageError(f"{kind} needs a .mfc Majorana code")
            if not _check_majorana(code):
                return EXIT_INVALID
            out = maps.double(code) if kind == "double" else maps.jw_map_code(code)
    print(f"{src} -> {_summary(out)}")
    if args.distance:
        mw = args.max_weight
        if isinstance(out, StabilizerCode):
            d = qubit_distance(out, mw if mw is not None else default_max_weight(out.n)) if out.k else None
        else:
            d = analyze(out, mw).distance if out.logical_modes else None
        print(f"d = {_fmt(d)}")
    if args.out:
        write_code(out, args.out, f"{kind} of {', '.join(args.input)}")
        print(f"wrote {args.out}")
    return EXIT_OK


def parse_region(spec: str, code: MajoranaCode) -> list[int]:
    """``"0,3,4"`` or ``"rect x0 y0 x1 y1"`` (inclusive, needs a layout)."""
    spec = spec.strip()
    if spec.startswith("rect"):
        parts = spec.split()
        if len(parts) != 5:
            raise UsageError("rect needs four integers: rect x0 y0 x1 y1")
        try:
            x0, y0, x1, y1 = map(int, parts[1:])
        except ValueError:
            raise UsageError(f"bad rect spec {spec!r}") from None
        if code.layout is None:
            raise UsageError("rect regions need mode positions")
        return [u for u, (x, y) in enumerate(code.layout.positions) if x0 <= x <= x1 and y0 <= y <= y1]
    if not spec:
        return []
    try:
        region = sorted({int(t) for t in spec.replace(" ", "").split(",") if t})
    except ValueError:
        raise UsageError(f"bad region spec {spec!r}") from None
    for u in region:
        if not 0 <= u < code.modes:
            raise UsageError(f"mode {u} outside 0..{code.modes - 1}")
    return region


def cmd_clean(args) -> int:
    code = _load_majorana(args.input)
    if not _check_majorana(code):
        return EXIT_INVALID
    region = parse_region(args.region, code)
    res = region_logicals(code, region, refine=args.refine)
    if res.cleanable:
        print(f"cleanable: region {region}")
    else:
        print(f"uncleanable: region {region}")
        print(f"witness {res.witness.support()}")
        if res.even is not None:
            print(f"even logical {res.even.support()}")
        if res.odd is not None:
            print(f"odd logical {res.odd.support()}")
    return EXIT_OK


def cmd_strips(args) -> int:
    code = _load_majorana(args.input)
    if not _check_majorana(code):
        return EXIT_INVALID
    if code.layout is None:
        raise UsageError("strips need mode positions")
    part = make_strips(code.layout, args.axis, args.width, force=args.force)
    verdict = strip_lemma_analysis(code, part)
    print(f"{len(part)} strips of widths {list(part.widths)}; generator diameter {verdict.generator_diameter}")
    if verdict.even:
        print(f"case (i): strip {verdict.even[0]} holds even logical {verdict.even[1]}")
    if verdict.odd_pair:
        (i, a), (j, b) = verdict.odd_pair
        print(f"case (ii): strips {i} and {j} hold odd logicals {a} and {b}")
    return EXIT_OK


def cmd_scale(args) -> int:
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        print(color_code.CSV_HEADER, file=out)
        for R in args.R:
            for L in args.L:
                if color_code.cylinder_modes(R, L) > args.mode_cap:
                    print(f"{R},{L},{color_code.cylinder_modes(R, L)},exhausted,exhausted,exhausted", file=out)
                    continue
                print(color_code.cylinder_row(R, L, args.max_weight).csv(), file=out, flush=True)
    finally:
        if args.out:
            out.close()
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mfc", description="Majorana fermion and qubit stabilizer code toolkit")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized internals (default 0)")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="write a catalog fixture or a color-code cylinder")
    b.add_argument("name", choices=sorted(catalog.CATALOG) + ["color-cylinder"])
    b.add_argument("--n", type=int)
    b.add_argument("--lx", type=int)
    b.add_argument("--ly", type=int)
    b.add_argument("--R", type=int)
    b.add_argument("--L", type=int)
    b.add_argument("--out")
    b.add_argument("--surface-json", help="also dump the surface graph (color-cylinder only)")
    b.set_defaults(func=cmd_build)

    a = sub.add_parser("analyze", help="rank, k, k_odd, distance and l_even of a code file")
    a.add_argument("--input", required=True)
    a.add_argument("--max-weight", type=int, help="distance search bound (default: full up to 20 modes, else 6)")
    a.add_argument("--json", action="store_true")
    a.add_argument("--sorted", action="store_true", help="accepted for compatibility; JSON keys are always sorted")
    a.add_argument("--show", type=int, default=4, help="witnesses to print in table mode")
    a.set_defaults(func=cmd_analyze)

    m = sub.add_parser("map", help="transform a code")
    m.add_argument("kind", choices=["qubit-to-majorana", "double", "jordan-wigner", "product"])
    m.add_argument("--input", action="append", required=True, help="repeat for product")
    m.add_argument("--spacer", type=int, default=0, help="paired idle modes between product blocks")
    m.add_argument("--out")
    m.add_argument("--distance", action="store_true", help="also compute the distance of the result")
    m.add_argument("--max-weight", type=int)
    m.set_defaults(func=cmd_map)

    c = sub.add_parser("clean", help="test a region for cleanability")
    c.add_argument("--input", required=True)
    c.add_argument("--region", required=True, help="comma-separated modes or 'rect x0 y0 x1 y1'")
    c.add_argument("--refine", type=int, default=6, help="search bound for minimal witnesses")
    c.set_defaults(func=cmd_clean)

    s = sub.add_parser("strips", help="strip analysis along one axis")
    s.add_argument("--input", required=True)
    s.add_argument("--axis", choices=["x", "y"], default="x")
    s.add_argument("--width", type=int, required=True)
    s.add_argument("--force", action="store_true", help="allow cutting a periodic axis")
    s.set_defaults(func=cmd_strips)

    sc = sub.add_parser("scale", help="color-code cylinder scaling table as CSV")
    sc.add_argument("--R", type=int, nargs="+", default=[3, 5])
    sc.add_argument("--L", type=int, nargs="+", default=[1, 2, 3])
    sc.add_argument("--max-weight", type=int)
    sc.add_argument("--mode-cap", type=int, default=200)
    sc.add_argument("--out")
    sc.set_defaults(func=cmd_scale)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    random.seed(args.seed)
    try:
        return args.func(args)
    except NonCommutingGenerators as e:
        _err(str(e))
        return EXIT_INVALID
    except (UsageError, FormatError, CodeError, ValueError) as e:
        _err(str(e))
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
