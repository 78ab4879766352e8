"""Command-line front end: ``heapsize {stats,growth,fit,project,analyze}``.

Exit codes: 0 success, 2 configuration error, 3 ingest error,
4 no grid point meets the threshold, 5 unusable growth data.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import svg
from .errors import ConfigError, HeapsizeError
from .growth import read_growth_csv, write_growth_csv
from .heaps import fit_heaps, params_to_dict, read_fit_json, write_fit_json
from .pipeline import (
    ORDERINGS,
    STATS_COLUMNS,
    RunConfig,
    analyze,
    chart_set,
    collect_stats,
    format_table,
    growth_for,
    project_one,
    series_points,
    stats_rows,
    write_stats_csv,
)
from .projection import ProjectionGrid, write_projection_csv, write_recommendation_json
from .tokenizer import DigitPolicy, PunctuationPolicy, TokenRules


def _pin(text):
    pos, sep, cid = text.partition("=")
    if not sep or not cid:
        raise argparse.ArgumentTypeError(f"expected POS=ID, got {text!r}")
    try:
        return int(pos), cid
    except ValueError:
        raise argparse.ArgumentTypeError(f"pin position must be an integer, got {pos!r}") from None


def _seed(text):
    value = int(text, 0)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _corpus_args(p):
    p.add_argument("--manifest", required=True, help="corpus manifest (JSON)")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--target-tokens", type=int, default=None,
                   help="per-domain sample size (default: smallest domain's raw size)")
    p.add_argument("--unit", choices=("line", "sentence", "token"), default="sentence")
    p.add_argument("--case-fold", action="store_true")
    p.add_argument("--keep-digits", action="store_true", help="keep tokens made only of digits")
    p.add_argument("--keep-punct", action="store_true", help="do not strip edge punctuation or split on '/'")


def _ordering_args(p):
    p.add_argument("--ordering", action="append", choices=sorted(ORDERINGS),
                   help="repeatable; default: types-desc and manifest")
    p.add_argument("--pin", action="append", type=_pin, default=[], metavar="POS=ID",
                   help="fix a corpus at a 1-based position for --ordering shuffle")


def _projection_args(p):
    p.add_argument("--grid-start", type=int, default=1_000_000)
    p.add_argument("--grid-end", type=int, default=102_000_000)
    p.add_argument("--grid-step", type=int, default=1_000_000)
    p.add_argument("--threshold", type=float, default=0.0001)
    p.add_argument("--mode", choices=("paper-compat", "exact"), default="paper-compat")
    p.add_argument("--emit-svg", action="store_true")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="heapsize",
        description="Estimate an appropriate corpus size from Heaps' law and TTR change.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="per-domain raw and sampled token/type counts")
    _corpus_args(p)
    p.add_argument("--out", default=".", help="output directory")

    p = sub.add_parser("growth", help="cumulative growth series CSV per ordering")
    _corpus_args(p)
    _ordering_args(p)
    p.add_argument("--out", default=".")

    p = sub.add_parser("fit", help="fit Heaps' law to a growth CSV")
    p.add_argument("growth_csv")
    p.add_argument("--out", default=None, help="directory for the fit JSON (default: print only)")

    p = sub.add_parser("project", help="project types and TTR from a fit JSON and recommend a size")
    p.add_argument("fit_json")
    _projection_args(p)
    p.add_argument("--out", default=".")

    p = sub.add_parser("analyze", help="run the whole pipeline")
    _corpus_args(p)
    _ordering_args(p)
    _projection_args(p)
    p.add_argument("--out", default="heapsize-out")
    return parser


def config_from_args(args) -> RunConfig:
    rules = TokenRules(
        DigitPolicy.KEEP_ALL if args.keep_digits else DigitPolicy.EXCLUDE_PURE_DIGIT_TOKENS,
        PunctuationPolicy.KEEP_ATTACHED if args.keep_punct else PunctuationPolicy.STRIP,
        args.case_fold,
    )
    cfg = RunConfig(args.manifest, args.seed, args.target_tokens, args.unit, out=args.out, rules=rules)
    if getattr(args, "ordering", None):
        cfg.orderings = tuple(dict.fromkeys(args.ordering))
    pins = dict(getattr(args, "pin", []) or [])
    if pins and "shuffle" not in cfg.orderings:
        raise ConfigError("--pin only applies to --ordering shuffle")
    cfg.pins = pins
    if hasattr(args, "grid_start"):
        cfg.grid = ProjectionGrid(args.grid_start, args.grid_end, args.grid_step)
        cfg.threshold = args.threshold
        cfg.mode = args.mode.replace("-", "_")
        cfg.emit_svg = args.emit_svg
    return cfg


def _tag(path, prefix):
    stem = os.path.splitext(os.path.basename(path))[0]
    return stem[len(prefix):] if stem.startswith(prefix) and len(stem) > len(prefix) else stem


def run(args) -> int:
    if args.command == "fit":
        params = fit_heaps(read_growth_csv(args.growth_csv))
        if args.out:
            os.makedirs(args.out, exist_ok=True)
            write_fit_json(params, os.path.join(args.out, f"fit_{_tag(args.growth_csv, 'growth_')}.json"))
        print(json.dumps(params_to_dict(params), ensure_ascii=False, indent=2))
        return 0

    if args.command == "project":
        params = read_fit_json(args.fit_json)
        grid = ProjectionGrid(args.grid_start, args.grid_end, args.grid_step)
        rows, rec = project_one(params, grid, args.threshold, args.mode.replace("-", "_"))
        tag = _tag(args.fit_json, "fit_")
        os.makedirs(args.out, exist_ok=True)
        write_projection_csv(rows, os.path.join(args.out, f"projection_{tag}.csv"))
        write_recommendation_json(rec, os.path.join(args.out, f"recommendation_{tag}.json"))
        if args.emit_svg:
            for name, text in chart_set({tag: series_points(params)}, {tag: rows}).items():
                svg.write_svg(os.path.join(args.out, f"{tag}_{name}"), text)
        print(f"k={params.k:.5f} beta={params.beta:.5f} -> recommended size {rec.n_recommended:,} tokens"
              f" ({rec.mode}, threshold {rec.threshold})")
        return 0

    cfg = config_from_args(args)
    if args.command == "analyze":
        summary = analyze(cfg)
        for tag, o in summary["orderings"].items():
            print(f"{tag}: V = {o['k']:.5f} * N^{o['beta']:.5f} (R^2 {o['r_squared']:.4f}); "
                  f"recommended size {o['n_recommended']:,} tokens")
        print(f"outputs written to {cfg.out}")
        return 0

    stats = collect_stats(cfg)
    os.makedirs(cfg.out, exist_ok=True)
    if args.command == "stats":
        write_stats_csv(stats, os.path.join(cfg.out, "stats.csv"))
        print(format_table(STATS_COLUMNS, stats_rows(stats)))
        return 0
    for tag, series in growth_for(cfg, stats).items():
        path = os.path.join(cfg.out, f"growth_{tag}.csv")
        write_growth_csv(series, path)
        print(path)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except HeapsizeError as e:
        print(f"heapsize: error: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
