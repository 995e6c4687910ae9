"""Date and compare Shakespeare's plays.

Needs the local corpus first:

    python3 scripts/fetch_corpus.py
    python3 demos/04_shakespeare.py

Roughly ten seconds on a laptop.
"""
import sys
from pathlib import Path

import numpy as np

from stylochron.model import loo_predict_years
from stylochron.report import RunConfig, classify_genres, era_compare, genre_compare, load_study, trend_report

manifest = Path(__file__).resolve().parent.parent / "corpus" / "manifest.csv"
if not manifest.is_file():
    sys.exit("corpus not found; run scripts/fetch_corpus.py first")

config = RunConfig(manifest=manifest, jobs=4)
study = load_study(config)
print(f"{study.matrix.shape[0]} plays x {study.matrix.shape[1]} descriptors\n")

print("descriptors most correlated with year")
trends = trend_report(study.matrix, study.years)
for row in trends[:8]:
    print(f"  {row.descriptor:28} r = {row.r:+.3f}  p = {row.p:.1e}")
for name in ("sentence_length_mean", "sentiment_mean"):
    row = next(t for t in trends if t.descriptor == name)
    print(f"  {name:28} r = {row.r:+.3f}  p = {row.p:.2f}")

pred = loo_predict_years(study.matrix, study.years)
print(f"\nleave-one-out dating: r = {pred.summary.r:.3f}, p = {pred.summary.p_two_tailed:.1e}")
errors = np.abs(np.subtract(pred.predicted, pred.actual))
print(f"median absolute error {np.median(errors):.1f} years")
worst = sorted(pred.rows(), key=lambda r: -abs(r[2] - r[1]))[:3]
for doc_id, actual, predicted in worst:
    print(f"  {doc_id:20} {actual:.0f} predicted {predicted:.1f}")

era = era_compare(study.matrix, study.years, split_year=1600, focus_id="romeo_and_juliet")
print("\nRomeo and Juliet against plays before and after 1600 (in standard errors)")
for name in ("word_homogeneity_mean", "sentiment_mean", "sentence_length_mean"):
    r = era.row(name)
    print(f"  {name:24} before {r.sigma_before:5.2f}   after {r.sigma_after:5.2f}")

genre = genre_compare(study.matrix, study.genres)
print("\ncomedy vs tragedy")
for name in ("sentiment_mean", "word_length_mean", "freq_question", "sentence_length_std"):
    r = genre.row(name)
    print(f"  {name:22} {r.first.mean:8.4f} {r.second.mean:8.4f}   p = {r.ttest.p_two_tailed:.3f}")
print(f"holdout accuracy over 100 runs: {classify_genres(study, config).accuracy:.2f}")
