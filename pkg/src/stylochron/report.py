"""Experiment reports and the end-to-end pipeline driver.

Artifacts written by :func:`build_report` (all UTF-8, LF, locale-free)::

    features.csv     id + descriptors in catalog order
    trends.csv       descriptor,r,p,n,degenerate   (sorted by |r|)
    predictions.csv  id,actual_year,predicted_year (leave-one-out)
    era.csv          before/after group summaries and focus sigma distances
    genre.csv        comedy/tragedy summaries and Welch t-test
    scatter.svg      actual vs predicted year
    run.json         configuration echo and summary numbers
"""
from __future__ import annotations

import csv
import io
import json
import logging
import math
import sys
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Sequence

import numpy as np

from . import __version__
from .corpus import CleaningRules, Genre, Manifest, load_corpus, load_manifest
from .errors import DegenerateInput, InsufficientData, IoError, SchemaError, StylochronError
from .features import CATALOG_VERSION, FeatureConfig, extract_many
from .model import (
    ClassificationResult,
    FeatureMatrix,
    RegressionResult,
    loo_predict_years,
    repeated_holdout_classify,
)
from .stats import GroupSummary, TTestResult, correlate, group_summary, sigma_difference, welch_ttest
from .textproc import Lexicons, default_lexicon_dir, load_lexicons

log = logging.getLogger(__name__)

GENRE_CLASSES = (Genre.COMEDY.value, Genre.TRAGEDY.value)


def fmt(x) -> str:
    """Shortest round-trip float text; '' for missing values."""
    if x is None:
        return ""
    if isinstance(x, (bool, np.bool_)):
        return "1" if x else "0"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return repr(float(x))


# ---------------------------------------------------------------------------
# trends

@dataclass(frozen=True)
class TrendRow:
    descriptor: str
    r: float
    p: float
    n: int
    degenerate: bool = False


def trend_report(matrix: FeatureMatrix, years: Sequence[float]) -> list[TrendRow]:
    """Correlation of every descriptor with year, strongest first.

    Constant descriptors are kept with r = 0, p = 1 and ``degenerate`` set.
    """
    n = matrix.shape[0]
    if n < 4:
        raise InsufficientData("trend report needs at least 4 documents")
    rows = []
    for j, name in enumerate(matrix.columns):
        try:
            c = correlate(matrix.values[:, j], years)
            rows.append(TrendRow(name, c.r, c.p_two_tailed, n))
        except DegenerateInput:
            rows.append(TrendRow(name, 0.0, 1.0, n, degenerate=True))
    return sorted(rows, key=lambda row: -abs(row.r))


# ---------------------------------------------------------------------------
# era comparison

@dataclass(frozen=True)
class EraRow:
    descriptor: str
    before: GroupSummary
    after: GroupSummary
    focus_value: float | None = None
    sigma_before: float | None = None
    sigma_after: float | None = None


@dataclass(frozen=True)
class EraComparison:
    split_year: int
    focus_id: str | None
    rows: tuple[EraRow, ...]

    def row(self, descriptor: str) -> EraRow:
        return next(r for r in self.rows if r.descriptor == descriptor)


def _sigma(x: float, g: GroupSummary) -> float | None:
    try:
        return sigma_difference(x, g)
    except DegenerateInput:
        return None


def era_compare(
    matrix: FeatureMatrix, years: Sequence[int], split_year: int = 1600, focus_id: str | None = None
) -> EraComparison:
    """Group summaries before (year < split) and after (year >= split).

    The focus document is left out of both groups; its values are compared
    to each group in standard errors. A group with zero standard error
    yields ``None`` for that sigma.
    """
    years = list(years)
    if focus_id is not None and focus_id not in matrix.ids:
        raise SchemaError(f"focus document {focus_id!r} not in corpus")
    before = [i for i, y in enumerate(years) if y < split_year and matrix.ids[i] != focus_id]
    after = [i for i, y in enumerate(years) if y >= split_year and matrix.ids[i] != focus_id]
    if not before or not after:
        raise InsufficientData(f"both eras around {split_year} need at least one document")
    focus = matrix.row(focus_id) if focus_id is not None else None
    rows = []
    for j, name in enumerate(matrix.columns):
        gb = group_summary(matrix.values[before, j])
        ga = group_summary(matrix.values[after, j])
        if focus is None:
            rows.append(EraRow(name, gb, ga))
        else:
            x = float(focus[j])
            rows.append(EraRow(name, gb, ga, x, _sigma(x, gb), _sigma(x, ga)))
    return EraComparison(split_year, focus_id, tuple(rows))


# ---------------------------------------------------------------------------
# genre comparison

@dataclass(frozen=True)
class GenreRow:
    descriptor: str
    first: GroupSummary
    second: GroupSummary
    ttest: TTestResult | None


@dataclass(frozen=True)
class GenreComparison:
    classes: tuple[str, str]
    ids: tuple[tuple[str, ...], tuple[str, ...]]
    rows: tuple[GenreRow, ...]

    def row(self, descriptor: str) -> GenreRow:
        return next(r for r in self.rows if r.descriptor == descriptor)


def genre_compare(
    matrix: FeatureMatrix, labels: Sequence[str], classes: tuple[str, str] = GENRE_CLASSES
) -> GenreComparison:
    """Per-descriptor class means with SE and a Welch t-test.

    Rows whose label is not one of ``classes`` (histories, other) are ignored.
    """
    labels = [str(getattr(lab, "value", lab)) for lab in labels]
    a = [i for i, lab in enumerate(labels) if lab == classes[0]]
    b = [i for i, lab in enumerate(labels) if lab == classes[1]]
    if len(a) < 2 or len(b) < 2:
        raise InsufficientData(f"need at least 2 {classes[0]} and 2 {classes[1]} documents")
    rows = []
    for j, name in enumerate(matrix.columns):
        xa, xb = matrix.values[a, j], matrix.values[b, j]
        try:
            tt = welch_ttest(xa, xb)
        except DegenerateInput:
            tt = None
        rows.append(GenreRow(name, group_summary(xa), group_summary(xb), tt))
    ids = (tuple(matrix.ids[i] for i in a), tuple(matrix.ids[i] for i in b))
    return GenreComparison(classes, ids, tuple(rows))


# ---------------------------------------------------------------------------
# SVG scatter

def _nice_step(span: float, target: int = 8) -> int:
    raw = max(span / target, 1.0)
    mag = 10 ** math.floor(math.log10(raw))
    for m in (1, 2, 5, 10):
        if m * mag >= raw:
            return int(m * mag)
    return int(10 * mag)


def scatter_svg(
    pairs: Sequence[tuple[float, float]],
    out: str | Path | None = None,
    labels: Sequence[str] | None = None,
    title: str = "Actual vs predicted year",
) -> str:
    """Render (actual, predicted) pairs as a standalone SVG; write it if ``out`` is given."""
    if not pairs:
        raise InsufficientData("scatter plot needs at least one pair")
    width, height, margin = 640, 520, 70
    vals = [v for p in pairs for v in p]
    lo = math.floor(min(vals)) - 1
    hi = math.ceil(max(vals)) + 1
    step = _nice_step(hi - lo)
    lo = step * math.floor(lo / step)
    hi = step * math.ceil(hi / step)
    plot_w, plot_h = width - 2 * margin, height - 2 * margin

    def sx(v: float) -> float:
        return margin + (v - lo) / (hi - lo) * plot_w

    def sy(v: float) -> float:
        return height - margin - (v - lo) / (hi - lo) * plot_h

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f"<title>{_esc(title)}</title>",
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<g stroke="black" stroke-width="1">'
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" y2="{height - margin}"/>'
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" y2="{height - margin}"/></g>',
    ]
    for t in range(lo, hi + 1, step):
        x, y = sx(t), sy(t)
        lines.append(
            f'<line x1="{x:.2f}" y1="{height - margin}" x2="{x:.2f}" y2="{height - margin + 5}" stroke="black"/>'
            f'<text x="{x:.2f}" y="{height - margin + 20}" text-anchor="middle">{t}</text>'
        )
        lines.append(
            f'<line x1="{margin - 5}" y1="{y:.2f}" x2="{margin}" y2="{y:.2f}" stroke="black"/>'
            f'<text x="{margin - 8}" y="{y + 4:.2f}" text-anchor="end">{t}</text>'
        )
    lines.append(
        f'<text x="{width / 2:.2f}" y="{height - 20}" text-anchor="middle">Actual year</text>'
        f'<text x="20" y="{height / 2:.2f}" text-anchor="middle" '
        f'transform="rotate(-90 20 {height / 2:.2f})">Predicted year</text>'
    )
    lines.append(
        f'<line class="identity" x1="{sx(lo):.2f}" y1="{sy(lo):.2f}" x2="{sx(hi):.2f}" y2="{sy(hi):.2f}" '
        f'stroke="grey" stroke-dasharray="4 4"/>'
    )
    for i, (actual, predicted) in enumerate(pairs):
        tip = f"{labels[i]}: " if labels is not None else ""
        lines.append(
            f'<circle class="point" cx="{sx(actual):.2f}" cy="{sy(predicted):.2f}" r="4" fill="steelblue">'
            f"<title>{_esc(tip)}{actual:.0f} -&gt; {predicted:.1f}</title></circle>"
        )
    lines.append("</svg>")
    svg = "\n".join(lines) + "\n"
    if out is not None:
        try:
            with open(out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(svg)
        except OSError as exc:
            raise IoError(f"cannot write {out}: {exc.strerror}") from None
    return svg


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


# ---------------------------------------------------------------------------
# CSV / JSON I/O

def _csv_text(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([c if isinstance(c, str) else fmt(c) for c in row])
    return buf.getvalue()


def _write(path: Path, text: str) -> Path:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc.strerror}") from None
    return path


def features_csv(matrix: FeatureMatrix) -> str:
    return _csv_text(("id",) + matrix.columns, ([i, *row] for i, row in zip(matrix.ids, matrix.values)))


def read_features_csv(path: str | Path) -> FeatureMatrix:
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if not header or header[0] != "id":
            raise SchemaError(f"{path}: first column must be 'id'")
        ids, rows = [], []
        for rec in reader:
            ids.append(rec[0])
            rows.append([float(v) for v in rec[1:]])
    return FeatureMatrix(tuple(ids), tuple(header[1:]), np.array(rows).reshape(len(ids), len(header) - 1))


def trends_csv(rows: Sequence[TrendRow]) -> str:
    return _csv_text(("descriptor", "r", "p", "n", "degenerate"), ((t.descriptor, t.r, t.p, t.n, t.degenerate) for t in rows))


def predictions_csv(result: RegressionResult) -> str:
    return _csv_text(("id", "actual_year", "predicted_year"), ((i, int(a), p) for i, a, p in result.rows()))


def era_csv(era: EraComparison) -> str:
    header = ("descriptor", "before_mean", "before_se", "before_n", "focus_value",
              "after_mean", "after_se", "after_n", "sigma_before", "sigma_after")
    return _csv_text(header, (
        (r.descriptor, r.before.mean, r.before.se, r.before.n, r.focus_value,
         r.after.mean, r.after.se, r.after.n, r.sigma_before, r.sigma_after)
        for r in era.rows
    ))


def genre_csv(genre: GenreComparison) -> str:
    a, b = genre.classes
    header = ("descriptor", f"{a}_mean", f"{a}_se", f"{a}_n", f"{b}_mean", f"{b}_se", f"{b}_n", "t", "df", "p")
    return _csv_text(header, (
        (r.descriptor, r.first.mean, r.first.se, r.first.n, r.second.mean, r.second.se, r.second.n,
         r.ttest.t if r.ttest else None, r.ttest.df if r.ttest else None,
         r.ttest.p_two_tailed if r.ttest else None)
        for r in genre.rows
    ))


# ---------------------------------------------------------------------------
# pipeline

@dataclass(frozen=True)
class RunConfig:
    manifest: Path
    out: Path = Path("out")
    lexicons: Path | None = None
    features: Path | None = None
    seed: int = 0
    k: int | None = None
    segments: int = 20
    drift_segments: int = 10
    dft_bins: int = 32
    split_year: int = 1600
    focus: str | None = None
    rules: CleaningRules = field(default_factory=CleaningRules)
    jobs: int = 1
    runs: int = 100
    train_per_class: int = 9
    test_per_class: bool = True
    weight_power: int = 1

    @property
    def regression_k(self) -> int:
        return 3 if self.k is None else self.k

    @property
    def classification_k(self) -> int:
        return 1 if self.k is None else self.k

    def feature_config(self) -> FeatureConfig:
        return FeatureConfig(
            homogeneity_segments=self.segments, drift_segments=self.drift_segments, dft_bins=self.dft_bins
        )

    def echo(self) -> dict:
        return {
            "manifest": str(self.manifest),
            "lexicons": str(self.lexicons) if self.lexicons else "<bundled>",
            "features": str(self.features) if self.features else None,
            "seed": self.seed,
            "k_regression": self.regression_k,
            "k_classification": self.classification_k,
            "segments": self.segments,
            "drift_segments": self.drift_segments,
            "dft_bins": self.dft_bins,
            "split_year": self.split_year,
            "focus": self.focus,
            "start_marker": self.rules.start_marker,
            "end_marker": self.rules.end_marker,
            "strip_speaker_labels": self.rules.strip_speaker_labels,
            "runs": self.runs,
            "train_per_class": self.train_per_class,
            "test_per_class": self.test_per_class,
            "weight_power": self.weight_power,
            "catalog_version": CATALOG_VERSION,
            "stylochron_version": __version__,
        }


@dataclass
class Study:
    """Manifest metadata aligned with a feature matrix (same row order)."""

    manifest: Manifest
    matrix: FeatureMatrix
    warnings: list[str] = field(default_factory=list)

    @property
    def years(self) -> list[int]:
        return [self.manifest.by_id(i).year for i in self.matrix.ids]

    @property
    def genres(self) -> list[str]:
        return [self.manifest.by_id(i).genre.value for i in self.matrix.ids]


def _lexicons(config: RunConfig) -> Lexicons:
    return load_lexicons(config.lexicons or default_lexicon_dir())


def load_study(config: RunConfig) -> Study:
    """Load the manifest and either extract features or read ``config.features``."""
    manifest = load_manifest(config.manifest)
    if len(manifest) == 0:
        raise InsufficientData("empty corpus", stage="corpus")
    if config.features is not None:
        matrix = read_features_csv(config.features)
        known = {r.id for r in manifest}
        unknown = [i for i in matrix.ids if i not in known]
        if unknown:
            raise SchemaError(f"feature rows not in manifest: {', '.join(unknown)}", stage="features")
        return Study(manifest, matrix)
    corpus = load_corpus(manifest, config.rules, jobs=config.jobs)
    vectors = extract_many([doc for _, doc in corpus], _lexicons(config), config.feature_config(), jobs=config.jobs)
    warnings = [f"{v.doc_id}: {w}" for v in vectors for w in v.warnings]
    return Study(manifest, FeatureMatrix.from_vectors(vectors), warnings)


def _stage(name: str, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except StylochronError as exc:
        exc.stage = exc.stage or name
        raise


def write_features(study: Study, out: Path) -> Path:
    return _write(out / "features.csv", features_csv(study.matrix))


def write_trends(study: Study, out: Path) -> list[TrendRow]:
    rows = _stage("trends", trend_report, study.matrix, study.years)
    _write(out / "trends.csv", trends_csv(rows))
    return rows


def write_predictions(study: Study, config: RunConfig, out: Path) -> RegressionResult:
    result = _stage("predict", loo_predict_years, study.matrix, study.years, config.regression_k, config.weight_power)
    _write(out / "predictions.csv", predictions_csv(result))
    scatter_svg(list(zip(result.actual, result.predicted)), out / "scatter.svg", labels=result.ids)
    return result


def write_era(study: Study, config: RunConfig, out: Path) -> EraComparison:
    era = _stage("era", era_compare, study.matrix, study.years, config.split_year, config.focus)
    _write(out / "era.csv", era_csv(era))
    return era


def write_genre(study: Study, out: Path) -> GenreComparison:
    genre = _stage("genre", genre_compare, study.matrix, study.genres)
    _write(out / "genre.csv", genre_csv(genre))
    return genre


def classify_genres(study: Study, config: RunConfig) -> ClassificationResult:
    keep = [i for i, g in enumerate(study.genres) if g in GENRE_CLASSES]
    sub = study.matrix.subset(keep)
    labels = [study.genres[i] for i in keep]
    return _stage(
        "classify", repeated_holdout_classify, sub, labels,
        train_per_class=config.train_per_class, runs=config.runs, k=config.classification_k,
        seed=config.seed, test_per_class=config.test_per_class,
    )


def write_classification(study: Study, config: RunConfig, out: Path) -> ClassificationResult:
    result = classify_genres(study, config)
    _write(out / "classification.json", result.to_json())
    return result


def _run_json(config: RunConfig, study: Study, extra: dict) -> str:
    doc = {
        "config": config.echo(),
        "n_documents": study.matrix.shape[0],
        "n_descriptors": study.matrix.shape[1],
        "warnings": study.warnings,
        **extra,
    }
    return json.dumps(doc, indent=2) + "\n"


def build_report(config: RunConfig) -> dict[str, Path]:
    """Run extraction, trends, LOO prediction, era and genre reports.

    Raises :class:`StylochronError` subclasses on any data problem.
    """
    out = Path(config.out)
    out.mkdir(parents=True, exist_ok=True)
    study = _stage("corpus", load_study, config)
    write_features(study, out)
    trends = write_trends(study, out)
    pred = write_predictions(study, config, out)
    write_era(study, config, out)
    write_genre(study, out)
    summary = pred.summary
    extra = {
        "prediction": {
            "k": pred.k,
            "r": summary.r if summary else None,
            "p_two_tailed": summary.p_two_tailed if summary else None,
        },
        "top_trends": [{"descriptor": t.descriptor, "r": t.r, "p": t.p} for t in trends[:10]],
    }
    _write(out / "run.json", _run_json(config, study, extra))
    names = ("features.csv", "trends.csv", "predictions.csv", "era.csv", "genre.csv", "scatter.svg", "run.json")
    return {n: out / n for n in names}


def run_pipeline(manifest: str | Path, config: RunConfig | None = None, stream=None) -> int:
    """:func:`build_report` with errors turned into a diagnostic and exit status 2."""
    stream = stream if stream is not None else sys.stderr
    config = replace(config, manifest=Path(manifest)) if config else RunConfig(manifest=Path(manifest))
    try:
        build_report(config)
    except StylochronError as exc:
        print(f"stylochron: error: {exc}", file=stream)
        return 2
    except (ValueError, OSError) as exc:
        print(f"stylochron: error: {exc}", file=stream)
        return 2
    return 0
