"""Build a local Shakespeare corpus from the ``shakespeare`` sdist on PyPI.

The sdist ships Project Gutenberg plain texts with the Gutenberg header and
licence already removed. Title and cast-list front matter is cut at the first
act, prologue or induction heading. Output::

    corpus/manifest.csv
    corpus/texts/<id>.txt

Usage: python3 scripts/fetch_corpus.py [--sdist PATH] [--out corpus]
"""
from __future__ import annotations

import argparse
import csv
import re
import subprocess
import sys
import tarfile
import tempfile
from pathlib import Path

# id, source file, title, year, genre. Years are approximate composition dates.
PLAYS = [
    ("alls_well", "alls_well_that_ends_well", "All's Well That Ends Well", 1604, "comedy"),
    ("antony_cleopatra", "antony_and_cleopatra", "Antony and Cleopatra", 1606, "tragedy"),
    ("as_you_like_it", "as_you_like_it", "As You Like It", 1599, "comedy"),
    ("comedy_of_errors", "comedy_of_errors", "The Comedy of Errors", 1594, "comedy"),
    ("coriolanus", "coriolanus", "Coriolanus", 1608, "tragedy"),
    ("cymbeline", "cymbeline", "Cymbeline", 1610, "other"),
    ("hamlet", "hamlet", "Hamlet", 1600, "tragedy"),
    ("henry_iv_1", "henry_iv_part_1", "Henry IV, Part 1", 1597, "history"),
    ("henry_iv_2", "henry_iv_part_2", "Henry IV, Part 2", 1598, "history"),
    ("henry_v", "henry_v", "Henry V", 1599, "history"),
    ("henry_vi_1", "henry_vi_part_1", "Henry VI, Part 1", 1592, "history"),
    ("henry_vi_2", "henry_vi_part_2", "Henry VI, Part 2", 1591, "history"),
    ("henry_vi_3", "henry_vi_part_3", "Henry VI, Part 3", 1591, "history"),
    ("henry_viii", "henry_viii", "Henry VIII", 1613, "history"),
    ("king_john", "john", "King John", 1596, "history"),
    ("julius_caesar", "julius_caesar", "Julius Caesar", 1599, "tragedy"),
    ("king_lear", "lear", "King Lear", 1605, "tragedy"),
    ("loves_labours_lost", "loves_labours_lost", "Love's Labour's Lost", 1595, "comedy"),
    ("macbeth", "macbeth", "Macbeth", 1606, "tragedy"),
    ("measure_for_measure", "measure_for_measure", "Measure for Measure", 1603, "comedy"),
    ("merchant_of_venice", "merchant_of_venice", "The Merchant of Venice", 1597, "other"),
    ("merry_wives", "merry_wives_of_windsor", "The Merry Wives of Windsor", 1601, "comedy"),
    ("midsummer", "midsummer_nights_dream", "A Midsummer Night's Dream", 1595, "comedy"),
    ("much_ado", "much_ado_about_nothing", "Much Ado About Nothing", 1598, "comedy"),
    ("othello", "othello", "Othello", 1604, "tragedy"),
    ("pericles", "pericles", "Pericles", 1607, "other"),
    ("richard_ii", "richard_ii", "Richard II", 1596, "history"),
    ("richard_iii", "richard_iii", "Richard III", 1593, "history"),
    ("romeo_and_juliet", "romeo_and_juliet", "Romeo and Juliet", 1596, "tragedy"),
    ("taming_of_the_shrew", "taming_of_the_shrew", "The Taming of the Shrew", 1590, "comedy"),
    ("tempest", "tempest", "The Tempest", 1610, "comedy"),
    ("timon_of_athens", "timon_of_athens", "Timon of Athens", 1605, "tragedy"),
    ("titus_andronicus", "tragedy_of_titus_andronicus", "Titus Andronicus", 1592, "tragedy"),
    ("troilus_cressida", "troilus_and_cressida", "Troilus and Cressida", 1602, "other"),
    ("twelfth_night", "twelfth_night", "Twelfth Night", 1601, "comedy"),
    ("two_gentlemen", "two_gentlemen_of_verona", "The Two Gentlemen of Verona", 1590, "comedy"),
    ("winters_tale", "winters_tale", "The Winter's Tale", 1609, "comedy"),
]

FIRST_HEADING = re.compile(r"^\s*(?:(?:ACT|Act) (?:I|1|FIRST)\b|(?:THE )?PROLOGUE|INDUCTION)", re.M)


def trim_front_matter(text: str) -> str:
    m = FIRST_HEADING.search(text)
    if m is None:
        raise ValueError("no opening heading found")
    return text[m.start():].strip() + "\n"


def download_sdist(dest: Path) -> Path:
    subprocess.run(
        [sys.executable, "-m", "pip", "download", "--no-deps", "--no-binary", ":all:",
         "--no-build-isolation", "-d", str(dest), "shakespeare==0.6"],
        check=True,
    )
    return next(dest.glob("shakespeare-0.6.tar.gz"))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sdist", type=Path, help="local shakespeare-0.6.tar.gz (downloaded if omitted)")
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "corpus")
    args = ap.parse_args(argv)

    with tempfile.TemporaryDirectory() as tmp:
        sdist = args.sdist or download_sdist(Path(tmp))
        with tarfile.open(sdist) as tar:
            members = {Path(m.name).name: m for m in tar.getmembers()
                       if "/shksprdata/texts/" in m.name and m.name.endswith("_gut.txt")}
            texts_dir = args.out / "texts"
            texts_dir.mkdir(parents=True, exist_ok=True)
            rows = []
            for doc_id, stem, title, year, genre in PLAYS:
                raw = tar.extractfile(members[f"{stem}_gut.txt"]).read().decode("utf-8")
                rel = f"texts/{doc_id}.txt"
                (args.out / rel).write_text(trim_front_matter(raw), encoding="utf-8", newline="\n")
                rows.append((doc_id, title, rel, year, genre))

    with open(args.out / "manifest.csv", "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["id", "title", "path", "year", "genre"])
        w.writerows(rows)
    print(f"wrote {len(rows)} plays to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
