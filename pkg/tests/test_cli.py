import json
import subprocess
import sys

import pytest

from conftest import synthetic_plays, write_corpus
from stylochron.cli import build_parser, main


@pytest.fixture
def corpus(tmp_path):
    return write_corpus(tmp_path / "c", synthetic_plays(n=24))


def test_usage_errors_exit_1(capsys):
    assert main_exit([]) == 1
    assert main_exit(["extract"]) == 1
    assert main_exit(["bogus", "--manifest", "m.csv"]) == 1
    assert main_exit(["trends", "--manifest", "m.csv", "--k", "0"]) == 1
    assert "usage" in capsys.readouterr().err


def main_exit(argv):
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code


def test_shared_flags_everywhere():
    parser = build_parser()
    for cmd in ("extract", "trends", "predict-years", "compare-eras", "classify", "report"):
        args = parser.parse_args([
            cmd, "--manifest", "m.csv", "--lexicons", "lx", "--out", "o", "--seed", "4", "--k", "2",
            "--segments", "10", "--dft-bins", "16", "--split-year", "1605", "--focus", "x",
            "--strip-speaker-labels", "--start-marker", "S", "--end-marker", "E",
        ])
        assert (args.seed, args.k, args.segments, args.dft_bins, args.split_year) == (4, 2, 10, 16, 1605)
        assert args.strip_speaker_labels and args.start_marker == "S"


def test_data_error_exit_2(tmp_path, capsys):
    manifest = tmp_path / "m.csv"
    manifest.write_text("id,title,path,year,genre\n", encoding="utf-8")
    assert main(["report", "--manifest", str(manifest), "--out", str(tmp_path / "o")]) == 2
    assert "empty corpus" in capsys.readouterr().err
    assert main(["extract", "--manifest", str(tmp_path / "nope.csv")]) == 2


def test_subcommands(corpus, tmp_path, capsys):
    out = tmp_path / "out"
    base = ["--manifest", str(corpus), "--out", str(out)]
    assert main(["extract", *base]) == 0
    feats = ["--features", str(out / "features.csv")]
    assert main(["trends", *base, *feats]) == 0
    assert main(["predict-years", *base, *feats]) == 0
    assert "pearson r=" in capsys.readouterr().out
    assert main(["compare-eras", *base, *feats, "--focus", "doc03"]) == 0
    assert main(["classify", *base, *feats, "--runs", "20", "--seed", "5"]) == 0
    for name in ("features.csv", "trends.csv", "predictions.csv", "scatter.svg", "era.csv",
                 "classification.json", "run.json"):
        assert (out / name).is_file(), name
    cls = json.loads((out / "classification.json").read_text(encoding="utf-8"))
    assert cls["seed"] == 5 and cls["runs"] == 20
    assert json.loads((out / "run.json").read_text(encoding="utf-8"))["command"] == "classify"


def test_focus_not_in_corpus(corpus, tmp_path):
    assert main(["compare-eras", "--manifest", str(corpus), "--out", str(tmp_path / "o"), "--focus", "zz"]) == 2


def test_module_entry_point(corpus, tmp_path):
    out = tmp_path / "o"
    proc = subprocess.run(
        [sys.executable, "-m", "stylochron", "report", "--manifest", str(corpus), "--out", str(out), "--jobs", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert (out / "scatter.svg").is_file()
    proc = subprocess.run([sys.executable, "-m", "stylochron", "--version"], capture_output=True, text=True)
    assert proc.stdout.strip() == "stylochron 0.1.0"
