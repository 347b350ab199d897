"""Command-line interface.

Exit codes: 0 success (and YES for ``decide``), 1 for NO, 2 for errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import oracle
from .bench import format_table, run_bench
from .counting import count_tilings, decide_via_counting, enumerate_tilings, solve
from .instances import GenerationStalled, GenSpec, generate
from .maxflow import decide_via_maxflow
from .region import ParseError, ValidationError, parse_region, serialize_region
from .tiling import render, to_dict


class CliError(Exception):
    pass


def _load(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_region(text)


def _emit(data: bytes, out: str | None):
    if out:
        Path(out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def cmd_decide(args) -> int:
    r = _load(args.file)
    if args.oracle:
        answer = oracle.brute_force_count(r) > 0
    elif args.method == "maxflow":
        answer = decide_via_maxflow(r)
    elif args.method == "counting":
        answer = decide_via_counting(r)
    else:
        a, b = decide_via_maxflow(r), decide_via_counting(r)
        if a != b:
            raise CliError(f"methods disagree: maxflow={a} counting={b}")
        answer = a
    print("YES" if answer else "NO")
    return 0 if answer else 1


def cmd_count(args) -> int:
    r = _load(args.file)
    if args.oracle:
        print(oracle.brute_force_count(r))
        return 0
    c = count_tilings(r)
    print(c.exponent_str() if args.exponent else c.value)
    return 0


def cmd_solve(args) -> int:
    r = _load(args.file)
    t = solve(r)
    if t is None:
        _emit(b"NO TILING\n", args.out)
        return 1
    _emit(render(r, t, args.format), args.out)
    return 0


def cmd_enumerate(args) -> int:
    r = _load(args.file)
    if args.oracle:
        tilings = oracle.brute_force_enumerate(r)[: args.limit]
    else:
        tilings = enumerate_tilings(r, args.limit)
    if args.format == "json":
        docs = [to_dict(r, t)["placements"] for t in tilings]
        out = json.dumps({"region": to_dict(r)["region"], "tilings": docs}) + "\n"
        _emit(out.encode(), args.out)
    else:
        _emit(b"\n".join(render(r, t, "ascii") for t in tilings), args.out)
    return 0


def cmd_render(args) -> int:
    _emit(render(_load(args.file), None, args.format), args.out)
    return 0


def cmd_gen(args) -> int:
    spec = GenSpec(args.cells, rows=args.rows, cols=args.cols, seed=args.seed, kind=args.kind)
    _emit(serialize_region(generate(spec)).encode(), args.out)
    return 0


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    sys.stdout.write(format_table(run_bench(sizes, args.seed, args.repeat)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ptromino", description="Tile regions with pegs by cornered trominoes.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file", help="grid file, or - for stdin")
        return sp

    sp = with_file("decide", "print YES or NO")
    sp.add_argument("--method", choices=("maxflow", "counting", "both"), default="counting")
    sp.add_argument("--oracle", action="store_true", help="use brute force (at most 30 cells)")
    sp.set_defaults(func=cmd_decide)

    sp = with_file("count", "print the number of tilings")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--exact", action="store_true", help="decimal count (default)")
    g.add_argument("--exponent", action="store_true", help="print as 2^k")
    sp.add_argument("--oracle", action="store_true", help="use brute force (at most 30 cells)")
    sp.set_defaults(func=cmd_count)

    sp = with_file("solve", "print one tiling")
    sp.add_argument("--format", choices=("ascii", "svg", "json"), default="ascii")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_solve)

    sp = with_file("enumerate", "print up to --limit tilings")
    sp.add_argument("--limit", type=int, required=True)
    sp.add_argument("--format", choices=("ascii", "json"), default="ascii")
    sp.add_argument("--oracle", action="store_true", help="use brute force (at most 30 cells)")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_enumerate)

    sp = with_file("render", "draw the region")
    sp.add_argument("--format", choices=("ascii", "svg", "json"), default="ascii")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_render)

    sp = sub.add_parser("gen", help="generate a region file")
    sp.add_argument("--cells", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--kind", choices=("tileable", "random"), default="tileable")
    sp.add_argument("--rows", type=int)
    sp.add_argument("--cols", type=int)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("bench", help="time count on generated instances")
    sp.add_argument("--sizes", required=True, help="comma-separated cell counts")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--repeat", type=int, default=5)
    sp.set_defaults(func=cmd_bench)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    if getattr(args, "limit", None) is not None and args.limit < 1:
        print("error: --limit must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (ParseError, ValidationError, CliError, GenerationStalled, oracle.TooLarge, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
