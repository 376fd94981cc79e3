"""Command-line driver.

    parbridges find (--input PATH | --gen N P SEED) [--machines M] [--seed S]
                    [--mode seq|sim|par] [--check]
    parbridges gen N P SEED [--out PATH]
    parbridges bench --bench SPEC [--mode sim|par] [--seed S] [--out PATH]

Exit codes: 0 ok, 1 oracle mismatch under --check, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from parbridges.bench import SweepSpecError, parse_sweep_spec, run_sweep, write_csv
from parbridges.bridges import find_bridges_dfs
from parbridges.cluster import find_bridges_parallel
from parbridges.graph import Graph, GraphParseError, generate_gnp, parse_edge_list, serialize_edge_list
from parbridges.oracle import bridges_bruteforce

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


class _UsageError(Exception):
    pass


def _gen_args(values: Sequence[str]) -> tuple[int, float, int]:
    try:
        return int(values[0]), float(values[1]), int(values[2])
    except ValueError:
        raise _UsageError(f"bad generator spec {' '.join(values)!r}; expected N P SEED") from None


def _load(args: argparse.Namespace) -> Graph:
    if args.input is not None:
        try:
            data = Path(args.input).read_bytes()
        except OSError as exc:
            raise _UsageError(f"cannot read {args.input}: {exc.strerror}") from None
        return parse_edge_list(data)
    return generate_gnp(*_gen_args(args.gen))


def _cmd_find(args: argparse.Namespace) -> int:
    if args.machines < 1:
        raise _UsageError("--machines must be at least 1")
    g = _load(args)
    if args.mode == "seq":
        report = find_bridges_dfs(g)
    else:
        execution = "serial" if args.mode == "sim" else "concurrent"
        report, _ = find_bridges_parallel(g, args.machines, args.seed, execution)
    out = sys.stdout
    for line in report.lines():
        out.write(line + "\n")
    if args.check:
        expected = bridges_bruteforce(g)
        if expected != report:
            missing = sorted(expected.bridge_edge_ids - report.bridge_edge_ids)
            extra = sorted(report.bridge_edge_ids - expected.bridge_edge_ids)
            print(f"check FAILED: missing ids {missing}, unexpected ids {extra}", file=sys.stderr)
            return EXIT_MISMATCH
        print(f"check ok: {len(report)} bridges match the brute-force oracle", file=sys.stderr)
    return EXIT_OK


def _write_output(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="ascii")
    except OSError as exc:
        raise _UsageError(f"cannot write {path}: {exc.strerror}") from None


def _cmd_gen(args: argparse.Namespace) -> int:
    g = generate_gnp(*_gen_args(args.params))
    _write_output(args.out, serialize_edge_list(g))
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    try:
        spec = parse_sweep_spec(args.bench, seed=args.seed)
    except SweepSpecError as exc:
        raise _UsageError(f"invalid sweep spec: {exc}") from None
    records = run_sweep(spec, args.mode)
    if args.out is None:
        write_csv(records, sys.stdout)
    else:
        try:
            with open(args.out, "w", encoding="ascii", newline="") as fh:
                write_csv(records, fh)
        except OSError as exc:
            raise _UsageError(f"cannot write {args.out}: {exc.strerror}") from None
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="parbridges", description="Find bridges of dense multigraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    find = sub.add_parser("find", help="print bridges as 'u v id' lines")
    src = find.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="PATH", help="edge-list file")
    src.add_argument("--gen", nargs=3, metavar=("N", "P", "SEED"), help="generate G(N, P)")
    find.add_argument("--machines", type=int, default=1, metavar="M")
    find.add_argument("--seed", type=int, default=0, help="partition seed")
    find.add_argument("--mode", choices=("seq", "sim", "par"), default="par")
    find.add_argument("--check", action="store_true", help="compare against the brute-force oracle")
    find.set_defaults(func=_cmd_find)

    gen = sub.add_parser("gen", help="write a G(n, p) edge list")
    gen.add_argument("params", nargs=3, metavar=("N", "P", "SEED"))
    gen.add_argument("--out", metavar="PATH")
    gen.set_defaults(func=_cmd_gen)

    bench = sub.add_parser("bench", help="run a scaling sweep and emit CSV")
    bench.add_argument("--bench", required=True, metavar="SPEC", help="e.g. 'M=1,2,4,8;V=20000;E=2000000'")
    bench.add_argument("--mode", choices=("sim", "par"), default="par")
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--out", metavar="PATH")
    bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphParseError as exc:
        print(f"parbridges: parse error: {exc}", file=sys.stderr)
    except (_UsageError, ValueError) as exc:
        print(f"parbridges: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
