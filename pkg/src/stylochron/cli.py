"""``stylochron`` command line.

Exit status: 0 success, 1 usage error, 2 data or processing error.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import __version__
from .corpus import CleaningRules
from .errors import StylochronError
from .report import (
    RunConfig,
    _run_json,
    build_report,
    load_study,
    write_classification,
    write_era,
    write_features,
    write_predictions,
    write_trends,
)

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _shared() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--manifest", type=Path, required=True, help="corpus manifest CSV (id,title,path,year,genre)")
    p.add_argument("--lexicons", type=Path, help="lexicon directory (default: bundled lexicons)")
    p.add_argument("--out", type=Path, default=Path("out"), help="output directory (default: ./out)")
    p.add_argument("--features", type=Path, help="reuse a features.csv instead of extracting")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k", type=_positive, help="neighbours (default 3 for years, 1 for classify)")
    p.add_argument("--segments", type=_positive, default=20, help="word homogeneity segments")
    p.add_argument("--drift-segments", type=_positive, default=10, help="sentiment/soundex drift segments")
    p.add_argument("--dft-bins", type=_positive, default=32)
    p.add_argument("--split-year", type=int, default=1600)
    p.add_argument("--focus", help="document id compared against both eras")
    p.add_argument("--strip-speaker-labels", action="store_true")
    p.add_argument("--start-marker")
    p.add_argument("--end-marker")
    p.add_argument("--jobs", type=_positive, default=1, help="parallel extraction workers")
    p.add_argument("--weight-power", type=int, choices=(1, 2), default=1, help="use |r| (1) or r^2 (2) as weights")
    p.add_argument("--runs", type=_positive, default=100, help="classification holdout runs")
    p.add_argument("--train-per-class", type=_positive, default=9)
    p.add_argument(
        "--one-test-total", dest="test_per_class", action="store_false",
        help="test one document per run instead of one per class",
    )
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stylochron", description="Stylometric analysis of dated plays.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    shared = _shared()
    for name, help_text in (
        ("extract", "write features.csv"),
        ("trends", "correlate every descriptor with year"),
        ("predict-years", "leave-one-out year prediction and scatter plot"),
        ("compare-eras", "before/after split-year comparison"),
        ("classify", "comedy vs tragedy repeated-holdout classification"),
        ("report", "run everything"),
    ):
        sub.add_parser(name, parents=[shared], help=help_text)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        manifest=args.manifest,
        out=args.out,
        lexicons=args.lexicons,
        features=args.features,
        seed=args.seed,
        k=args.k,
        segments=args.segments,
        drift_segments=args.drift_segments,
        dft_bins=args.dft_bins,
        split_year=args.split_year,
        focus=args.focus,
        rules=CleaningRules(args.start_marker, args.end_marker, args.strip_speaker_labels),
        jobs=args.jobs,
        runs=args.runs,
        train_per_class=args.train_per_class,
        test_per_class=args.test_per_class,
        weight_power=args.weight_power,
    )


def _dispatch(command: str, config: RunConfig) -> None:
    if command == "report":
        paths = build_report(config)
        print(f"wrote {len(paths)} artifacts to {config.out}")
        return
    out = Path(config.out)
    out.mkdir(parents=True, exist_ok=True)
    study = load_study(config)
    if command == "extract":
        path = write_features(study, out)
        print(f"{study.matrix.shape[0]} documents x {study.matrix.shape[1]} descriptors -> {path}")
    elif command == "trends":
        for row in write_trends(study, out)[:15]:
            print(f"{row.descriptor:28s} r={row.r:+.3f} p={row.p:.3g}")
    elif command == "predict-years":
        result = write_predictions(study, config, out)
        for doc_id, actual, predicted in result.rows():
            print(f"{doc_id:20s} {actual:.0f} -> {predicted:.1f}")
        if result.summary:
            print(f"pearson r={result.summary.r:.4f} p={result.summary.p_two_tailed:.3g} (n={result.summary.n})")
    elif command == "compare-eras":
        era = write_era(study, config, out)
        print(f"era comparison around {era.split_year} -> {out / 'era.csv'}")
    elif command == "classify":
        result = write_classification(study, config, out)
        print(f"accuracy {result.accuracy:.3f} over {result.runs} runs (seed {result.seed})")
    with open(out / "run.json", "w", encoding="utf-8", newline="\n") as fh:
        fh.write(_run_json(config, study, {"command": command}))


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        config = config_from_args(args)
    except ValueError as exc:
        print(f"stylochron: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        _dispatch(args.command, config)
    except StylochronError as exc:
        print(f"stylochron: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (ValueError, OSError) as exc:
        print(f"stylochron: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
