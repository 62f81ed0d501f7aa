"""Command-line entry point: ``bwperm <subcommand> ...``.

Exit status reports whether the tool ran, not the answer: ``0`` after a
successful computation (including "NO" and "NONE"), ``1`` on a crosscheck
mismatch, ``2`` on usage or parse errors.
"""

from __future__ import annotations

import argparse
import logging
import statistics
import sys
import time
from pathlib import Path

from . import __version__
from .check import crosscheck
from .instances import GeneratorConfig, generate_random, render_diagram
from .model import (
    Coloring,
    ParseError,
    Permutation,
    Piece,
    Scanline,
    ScanlineChain,
    find_conflict,
    parse_bottom_order,
    parse_permutation,
)
from .oracle import DEFAULT_GUARD, GeneralGraph, oracle_frontier
from .solver import PieceSolver, chain_frontier, chain_table, witness

log = logging.getLogger("bwperm")

PIECE_BENCH_LIMIT = 16


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def load_permutation(args: argparse.Namespace) -> Permutation:
    if args.perm is not None:
        return parse_bottom_order(args.perm)
    if args.input is not None:
        return parse_permutation(_read(args.input))
    raise UsageError("one of --perm or --input is required")


def parse_coloring(text: str, n: int) -> tuple[Coloring, ScanlineChain]:
    """Read the witness text format; unlisted vertices are uncolored."""
    sets: dict[str, list[int]] = {"black": [], "white": [], "uncolored": []}
    chain: list[Scanline] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        head, sep, rest = line.partition(":")
        head = head.strip().lower()
        if not sep or head not in (*sets, "scanlines"):
            raise ParseError(f"unrecognized line {line.strip()!r}", line=lineno)
        if head == "scanlines":
            for tok in rest.split():
                try:
                    a, b = tok.strip("()").split(",")
                    chain.append(Scanline(int(a), int(b)))
                except ValueError:
                    raise ParseError(f"bad scanline {tok!r}", line=lineno) from None
            continue
        for tok in rest.split():
            try:
                k = int(tok)
            except ValueError:
                raise ParseError(f"not a vertex label: {tok!r}", line=lineno) from None
            if not 1 <= k <= n:
                raise ParseError(f"vertex {k} out of range 1..{n}", line=lineno)
            sets[head].append(k)
    listed = sets["black"] + sets["white"] + sets["uncolored"]
    dupes = sorted({k for k in listed if listed.count(k) > 1})
    if dupes:
        raise ParseError(f"vertex {dupes[0]} listed more than once")
    try:
        return Coloring.from_sets(n, sets["black"], sets["white"]), ScanlineChain(tuple(chain))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _add_instance_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--perm", help='bottom order, e.g. "3 5 1 4 2"')
    src.add_argument("--input", help="permutation file ('-' for stdin)")


def _add_counts(p: argparse.ArgumentParser) -> None:
    p.add_argument("-b", type=int, required=True, help="black vertices")
    p.add_argument("-w", type=int, required=True, help="white vertices")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bwperm",
        description="Black-and-white colorings of permutation graphs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="can b black and w white vertices be placed?")
    _add_instance_args(p)
    _add_counts(p)

    p = sub.add_parser("frontier", help="max white count for every black count (TSV)")
    _add_instance_args(p)
    p.add_argument("--plot", metavar="FILE", help="also write a staircase figure")

    p = sub.add_parser("witness", help="print a coloring with exactly b black and w white")
    _add_instance_args(p)
    _add_counts(p)

    p = sub.add_parser("verify", help="check a coloring file against an instance")
    _add_instance_args(p)
    p.add_argument("--coloring", required=True, help="coloring in witness format")

    p = sub.add_parser("gen", help="seeded random permutation")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("crosscheck", help="solver vs. exhaustive oracle on random instances")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("bench", help="wall-clock statistics per solve path (TSV)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--plot", metavar="FILE", help="also write a timing figure")

    p = sub.add_parser("render", help="SVG permutation diagram")
    _add_instance_args(p)
    p.add_argument("--coloring", help="coloring in witness format; scanlines are drawn too")
    return parser


def cmd_decide(args, out) -> int:
    p = load_permutation(args)
    if args.b < 0 or args.w < 0:
        raise UsageError("counts must be non-negative")
    f = chain_frontier(p)
    out.write("YES\n" if args.b <= p.n and (args.b, args.w) in f else "NO\n")
    return 0


def cmd_frontier(args, out) -> int:
    p = load_permutation(args)
    f = chain_frontier(p)
    out.write(f.to_tsv())
    if args.plot:
        from .plotting import plot_frontier

        plot_frontier(f, args.plot, title=f"frontier of {p}" if p.n <= 20 else None)
        log.info("wrote %s", args.plot)
    return 0


def cmd_witness(args, out) -> int:
    p = load_permutation(args)
    if args.b < 0 or args.w < 0:
        raise UsageError("counts must be non-negative")
    wit = witness(p, args.b, args.w)
    out.write("NONE\n" if wit is None else wit.to_text())
    return 0


def cmd_verify(args, out) -> int:
    p = load_permutation(args)
    coloring, _ = parse_coloring(_read(args.coloring), p.n)
    ok, edge = find_conflict(p, coloring)
    if ok:
        b, w = coloring.counts()
        out.write(f"VALID b={b} w={w}\n")
    else:
        out.write(f"INVALID: edge {edge[0]}-{edge[1]}\n")
    return 0


def cmd_gen(args, out) -> int:
    try:
        cfg = GeneratorConfig(args.n, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(generate_random(cfg).to_text())
    return 0


def cmd_crosscheck(args, out) -> int:
    if args.n < 1 or args.n > DEFAULT_GUARD:
        raise UsageError(f"crosscheck needs 1 <= n <= {DEFAULT_GUARD}")
    if args.trials < 0:
        raise UsageError("trials must be non-negative")
    done, mismatch = crosscheck(args.n, args.trials, args.seed)
    if mismatch is not None:
        out.write(mismatch.report())
        return 1
    out.write(f"OK {done}/{args.trials}\n")
    return 0


def _timed(fn, p: Permutation) -> float:
    start = time.perf_counter()
    fn(p)
    return time.perf_counter() - start


def _chain_uncached(p: Permutation):
    chain_table.cache_clear()
    return chain_frontier(p)


def cmd_bench(args, out) -> int:
    if args.n < 1 or args.trials < 1:
        raise UsageError("n and trials must be positive")
    paths = {"chain": _chain_uncached}
    if args.n <= PIECE_BENCH_LIMIT:
        paths["piece"] = lambda p: PieceSolver(p).table(Piece.extreme(p.n))
    if args.n <= DEFAULT_GUARD:
        paths["oracle"] = lambda p: oracle_frontier(GeneralGraph.from_permutation(p))

    timings: dict[str, list[float]] = {name: [] for name in paths}
    for trial in range(args.trials):
        p = generate_random(GeneratorConfig(args.n, args.seed + trial))
        for name, fn in paths.items():
            timings[name].append(_timed(fn, p))

    out.write("path\tn\ttrials\tmean_s\tmin_s\tmax_s\n")
    for name, ts in timings.items():
        out.write(
            f"{name}\t{args.n}\t{args.trials}\t{statistics.fmean(ts):.6f}\t{min(ts):.6f}\t{max(ts):.6f}\n"
        )
    if args.plot:
        from .plotting import plot_bench

        plot_bench(timings, args.plot, args.n)
        log.info("wrote %s", args.plot)
    return 0


def cmd_render(args, out) -> int:
    p = load_permutation(args)
    coloring = chain = None
    if args.coloring:
        coloring, chain = parse_coloring(_read(args.coloring), p.n)
        for s in chain:
            if not (0 <= s.a <= p.n and 0 <= s.b <= p.n):
                raise UsageError(f"scanline {s} outside gap range 0..{p.n}")
    out.write(render_diagram(p, coloring, chain))
    return 0


COMMANDS = {
    "decide": cmd_decide,
    "frontier": cmd_frontier,
    "witness": cmd_witness,
    "verify": cmd_verify,
    "gen": cmd_gen,
    "crosscheck": cmd_crosscheck,
    "bench": cmd_bench,
    "render": cmd_render,
}


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=err)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, ValueError) as exc:
        err.write(f"bwperm {args.command}: error: {exc}\n")
        return 2

