"""Command line front door: derive, mine, gen, bench, serve."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import run_benchmark
from .ingest import TimeWindow, derive_sequence_db, load_transactions, write_sequence_csv, write_transaction_csv
from .results import MiningConfig
from .service import ALGORITHMS, serve
from .synth import SynthParams, generate


def _parse_support(text: str) -> int | float:
    value = float(text)
    if value.is_integer() and "." not in text:
        return int(value)
    return value


def _window_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--start", required=True, help="window start date (YYYY-MM-DD, inclusive)")
    parser.add_argument("--end", required=True, help="window end date (YYYY-MM-DD, inclusive)")


def _out_stream(path: str | None):
    return open(path, "w", newline="", encoding="utf-8") if path else sys.stdout


def cmd_derive(args: argparse.Namespace) -> int:
    db = load_transactions(args.data)
    window = TimeWindow.parse(args.start, args.end)
    seqdb = derive_sequence_db(db, window)
    out = _out_stream(args.out)
    try:
        write_sequence_csv(seqdb, out)
    finally:
        if out is not sys.stdout:
            out.close()
    print(f"derived {seqdb.object_count} sequences, interval {seqdb.interval_days} days", file=sys.stderr)
    return 0


def cmd_mine(args: argparse.Namespace) -> int:
    db = load_transactions(args.data)
    window = TimeWindow.parse(args.start, args.end)
    config = MiningConfig(
        min_support=_parse_support(args.min_support), max_pattern_length=args.max_len
    )
    seqdb = derive_sequence_db(db, window)
    result = ALGORITHMS[args.algorithm](seqdb, config)
    out = _out_stream(args.out)
    try:
        result.write_csv(out)
    finally:
        if out is not sys.stdout:
            out.close()
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            result.write_json(fh)
    print(
        f"{args.algorithm}: {len(result.patterns)} frequent patterns over "
        f"{result.object_count} objects in {result.timings.total_ms:.1f} ms "
        f"({result.timings.scan_count} scans)",
        file=sys.stderr,
    )
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    params = SynthParams(
        customers=args.D,
        avg_transactions=args.C,
        item_count=args.N,
        pattern_pool_size=args.pool,
        corruption_prob=args.corrupt,
        seed=args.seed,
    )
    db = generate(params)
    out = _out_stream(args.out)
    try:
        write_transaction_csv(db, out)
    finally:
        if out is not sys.stdout:
            out.close()
    print(f"generated {params.dataset_id}: {len(db)} records", file=sys.stderr)
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    datasets: list = []
    for spec_text in args.gen or []:
        d, c, n = (part for part in spec_text.split(","))
        datasets.append(
            SynthParams(
                customers=int(d), avg_transactions=float(c), item_count=int(n), seed=args.seed
            )
        )
    for path in args.data or []:
        datasets.append(load_transactions(path))
    if not datasets:
        print("bench: need at least one --gen D,C,N or --data file", file=sys.stderr)
        return 2

    window = TimeWindow.parse(args.start, args.end)
    supports = [_parse_support(tok) for tok in args.supports.split(",")]
    algorithms = args.algorithms.split(",")
    report = run_benchmark(
        datasets,
        [window],
        supports,
        algorithms,
        max_pattern_length=args.max_len,
        repeats=args.repeats,
    )
    out = _out_stream(args.out)
    try:
        report.write_csv(out)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    static_dir = args.static
    if static_dir is None:
        default_dist = Path("frontend") / "dist"
        if default_dist.is_dir():
            static_dir = default_dist
    serve(args.data, bind_address=args.bind, static_dir=static_dir)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="seqmine", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("derive", help="derive the per-object sequence table under a window")
    p.add_argument("--data", required=True, help="transaction CSV")
    _window_args(p)
    p.add_argument("--out", help="output CSV path (default stdout)")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("mine", help="mine frequent patterns under a window")
    p.add_argument("--data", required=True, help="transaction CSV")
    _window_args(p)
    p.add_argument("--min-support", required=True, help="absolute count (int) or fraction (0,1]")
    p.add_argument("--max-len", type=int, default=None, help="max pattern length")
    p.add_argument("--algorithm", choices=sorted(ALGORITHMS), default="rsp")
    p.add_argument("--out", help="result CSV path (default stdout)")
    p.add_argument("--json", help="also write a JSON report here")
    p.set_defaults(func=cmd_mine)

    p = sub.add_parser("gen", help="generate a synthetic transaction CSV")
    p.add_argument("--D", type=int, required=True, help="number of customers")
    p.add_argument("--C", type=float, required=True, help="average transactions per customer")
    p.add_argument("--N", type=int, required=True, help="number of distinct items")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pool", type=int, default=None, help="pattern pool size (default N)")
    p.add_argument("--corrupt", type=float, default=0.25, help="per-item corruption probability")
    p.add_argument("--out", help="output CSV path (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time rsp vs gsp over a support grid")
    p.add_argument("--gen", action="append", help="synthetic dataset as D,C,N (repeatable)")
    p.add_argument("--data", action="append", help="transaction CSV (repeatable)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--start", default="2008-01-01")
    p.add_argument("--end", default="2008-12-31")
    p.add_argument("--supports", default="0.0025,0.005,0.01,0.02", help="comma list of thresholds")
    p.add_argument("--algorithms", default="rsp,gsp", help="comma list from {rsp,gsp}")
    p.add_argument("--max-len", type=int, default=None, help="max pattern length")
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--out", help="report CSV path (default stdout)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("serve", help="run the preview/mining HTTP service")
    p.add_argument("--data", required=True, help="transaction CSV")
    p.add_argument("--bind", default="127.0.0.1:8080", help="host:port")
    p.add_argument("--static", default=None, help="console bundle dir (default frontend/dist if present)")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"seqmine {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
