"""Command-line interface: run sweeps or single evaluations, write CSV tables,
summary curves, and SVG heatmaps.

Subcommands::

    sparse-rc sweep      run a (chi_r, chi_i) grid and write the results table
    sparse-rc single     evaluate one configuration and print MC / N_eff
    sparse-rc summarize  reduce a sweep CSV to best-per-axis summary curves

Exit codes: 0 success, 2 usage error, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import NumericError
from .experiment import (Protocol, RawRecord, SweepRecord, SweepSpec, run_single,
                         run_sweep, summarize)
from .heatmap import write_svg_heatmap

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3

CSV_HEADER = "chi_r,chi_i,n_ok,mc_mean,mc_std,neff_mean,neff_std"
RAW_HEADER = "chi_r,chi_i,realization,mc_total,neff,per_delay_min,per_delay_max"


def _parse_count_list(text: str) -> list[int]:
    """Parse connectivity lists: comma-separated values and 'a..b' ranges."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo_s, hi_s = part.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
            if hi < lo:
                raise ValueError(f"empty range {part!r}")
            out.extend(range(lo, hi + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise ValueError(f"no values in {text!r}")
    return out


def _default_workers() -> int:
    env = os.environ.get("SPARSE_RC_WORKERS")
    if env:
        try:
            return int(env)
        except ValueError:
            pass
    return 1


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, default=100, help="reservoir units (N)")
    p.add_argument("--m", type=int, default=1, help="input dimension (M)")
    p.add_argument("--rho", type=float, default=0.9, help="target spectral radius")
    p.add_argument("--omega-in", type=float, default=1.0, help="input scaling")
    p.add_argument("--series-len", type=int, default=6000)
    p.add_argument("--washout", type=int, default=1000)
    p.add_argument("--train-len", type=int, default=4000)
    p.add_argument("--delays", type=int, default=200)
    p.add_argument("--input-lo", type=float, default=-0.8)
    p.add_argument("--input-hi", type=float, default=0.8)
    p.add_argument("--seed", type=int, default=42, help="master seed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sparse-rc",
        description="Sparse echo state network benchmark: memory capacity and "
                    "effective dimension over a connectivity grid.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    sweep = sub.add_parser("sweep", help="run a (chi_r, chi_i) grid sweep")
    _add_common_flags(sweep)
    sweep.add_argument("--chi-r", default="1..100",
                       help="recurrent connectivity values, e.g. '1,5,20' or '1..100'")
    sweep.add_argument("--chi-i", default="1..100",
                       help="input connectivity values, same syntax as --chi-r")
    sweep.add_argument("--realizations", type=int, default=50)
    sweep.add_argument("--full", action="store_true",
                       help="paper preset: 1..100 x 1..100 grid, 50 realizations "
                            "(multi-hour job)")
    sweep.add_argument("--workers", type=int, default=_default_workers())
    sweep.add_argument("--out", default="sweep.csv", help="output CSV path")
    sweep.add_argument("--emit-raw", action="store_true",
                       help="also write per-realization results next to --out")
    sweep.add_argument("--emit-svg", action="store_true",
                       help="also write MC and N_eff heatmaps next to --out")

    single = sub.add_parser("single", help="evaluate one configuration")
    _add_common_flags(single)
    single.add_argument("--chi-r", type=int, required=True)
    single.add_argument("--chi-i", type=int, required=True)
    single.add_argument("--realization", type=int, default=0,
                        help="realization index within the master seed")
    single.add_argument("--per-delay-out", default=None,
                        help="optional path for the per-delay correlation vector")

    summ = sub.add_parser("summarize", help="reduce a sweep CSV to summary curves")
    summ.add_argument("input", help="sweep CSV produced by the sweep subcommand")
    summ.add_argument("--out", default="summary", help="output path prefix")
    return parser


def parse_args(argv=None) -> argparse.Namespace:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.subcommand == "sweep":
        if args.full:
            args.chi_r, args.chi_i, args.realizations = "1..100", "1..100", 50
        try:
            args.chi_r_values = _parse_count_list(args.chi_r)
            args.chi_i_values = _parse_count_list(args.chi_i)
        except ValueError as exc:
            parser.error(f"--chi-r/--chi-i: {exc}")
        for flag, values in (("--chi-r", args.chi_r_values), ("--chi-i", args.chi_i_values)):
            bad = [v for v in values if not 1 <= v <= args.n]
            if bad:
                parser.error(f"{flag}: value {bad[0]} outside [1, {args.n}]")
        if args.workers < 1:
            parser.error("--workers: must be >= 1")
    if args.subcommand == "single":
        for flag, v in (("--chi-r", args.chi_r), ("--chi-i", args.chi_i)):
            if not 1 <= v <= args.n:
                parser.error(f"{flag}: value {v} outside [1, {args.n}]")
    return args


def _fmt(v) -> str:
    # repr of a float is the shortest decimal that round-trips
    return repr(float(v))


def write_csv(records: list[SweepRecord], path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(CSV_HEADER + "\n")
        for r in records:
            fh.write(f"{r.chi_r},{r.chi_i},{r.n_ok},{_fmt(r.mc_mean)},"
                     f"{_fmt(r.mc_std)},{_fmt(r.neff_mean)},{_fmt(r.neff_std)}\n")


def read_csv(path) -> list[SweepRecord]:
    records = []
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().strip()
        if header != CSV_HEADER:
            raise ValueError(f"unexpected CSV header in {path}: {header!r}")
        for line in fh:
            f = line.rstrip("\n").split(",")
            records.append(SweepRecord(int(f[0]), int(f[1]), int(f[2]), float(f[3]),
                                       float(f[4]), float(f[5]), float(f[6])))
    return records


def write_raw_csv(raw: list[RawRecord], path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(RAW_HEADER + "\n")
        for r in raw:
            fh.write(f"{r.chi_r},{r.chi_i},{r.realization},{_fmt(r.mc_total)},"
                     f"{_fmt(r.neff)},{_fmt(r.per_delay_min)},{_fmt(r.per_delay_max)}\n")


def write_summary_csv(curves, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("curve,chi,value,value_normalized\n")
        for name in ("best_by_chi_i", "best_by_chi_r", "slice_chi_i_1"):
            raw = getattr(curves, name)
            norm = dict(getattr(curves, name + "_normalized"))
            for chi, value in raw:
                fh.write(f"{name},{chi},{_fmt(value)},{_fmt(norm[chi])}\n")


def _spec_from_args(args, chi_r_values, chi_i_values, realizations) -> SweepSpec:
    return SweepSpec(
        chi_r_values=tuple(chi_r_values),
        chi_i_values=tuple(chi_i_values),
        master_seed=args.seed,
        n_units=args.n,
        n_inputs=args.m,
        spectral_radius=args.rho,
        input_scaling=args.omega_in,
        realizations=realizations,
        protocol=Protocol(
            series_len=args.series_len, washout=args.washout,
            train_len=args.train_len, n_delays=args.delays,
            input_lo=args.input_lo, input_hi=args.input_hi,
        ),
    )


def _out_stem(path: str) -> str:
    return path[:-4] if path.endswith(".csv") else path


def _cmd_sweep(args) -> int:
    spec = _spec_from_args(args, args.chi_r_values, args.chi_i_values, args.realizations)
    result = run_sweep(spec, workers=args.workers, collect_raw=args.emit_raw)
    if args.emit_raw:
        records, raw = result
        write_raw_csv(raw, _out_stem(args.out) + "_raw.csv")
    else:
        records = result
    write_csv(records, args.out)
    if args.emit_svg:
        write_svg_heatmap(records, "mc", _out_stem(args.out) + "_mc.svg")
        write_svg_heatmap(records, "neff", _out_stem(args.out) + "_neff.svg")
    return EXIT_OK


def _cmd_single(args) -> int:
    spec = _spec_from_args(args, [args.chi_r], [args.chi_i], 1)
    spec.validate()
    mc, neff = run_single(spec, args.chi_r, args.chi_i, args.realization)
    if args.per_delay_out:
        with open(args.per_delay_out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("delay,squared_correlation\n")
            for i, v in enumerate(mc.per_delay, start=1):
                fh.write(f"{i},{_fmt(v)}\n")
    out = {"chi_r": args.chi_r, "chi_i": args.chi_i,
           "mc_total": mc.total, "neff": neff.value}
    if args.per_delay_out:
        out["per_delay_path"] = args.per_delay_out
    print(json.dumps(out, indent=2))
    return EXIT_OK


def _cmd_summarize(args) -> int:
    records = read_csv(args.input)
    for metric in ("mc", "neff"):
        curves = summarize(records, metric)
        write_summary_csv(curves, f"{args.out}_{metric}.csv")
    return EXIT_OK


def main(argv=None) -> int:
    args = parse_args(argv)
    try:
        if args.subcommand == "sweep":
            return _cmd_sweep(args)
        if args.subcommand == "single":
            return _cmd_single(args)
        return _cmd_summarize(args)
    except NumericError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"file error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry_point() -> None:
    sys.exit(main())
