#!/usr/bin/env python3
"""Regenerate the lexicons shipped in ``src/stylochron/data``.

Sources (downloaded from PyPI, nothing is fetched from the web):

* POS: ``en-lexicon.txt`` from the ``pattern3`` sdist (Brill tagger lexicon
  trained on Brown + WSJ, MIT license; CMU Twitter additions, CC-BY 3.0).
* Valence: ``vader_lexicon.txt`` from the ``vaderSentiment`` wheel (MIT).

Usage::

    python scripts/build_lexicons.py            # downloads both packages with pip
    python scripts/build_lexicons.py --from DIR # DIR holds the two archives already

The curated blocks below are written first so they win over the Brill
entries (the loader keeps the first row of a duplicate word).
"""
from __future__ import annotations

import argparse
import io
import re
import subprocess
import sys
import tarfile
import tempfile
import zipfile
from pathlib import Path

DATA = Path(__file__).resolve().parents[1] / "src" / "stylochron" / "data"

WORD = re.compile(r"^[^\W\d_]+(?:['’-][^\W\d_]+)*$")

BRILL_TO_TAGSET = {
    "NN": "NN", "NNS": "NNS", "NNP": "NNP", "NNPS": "NNP",
    "VB": "VB", "VBD": "VBD", "VBG": "VBG", "VBN": "VBN", "VBP": "VBP", "VBZ": "VBZ",
    "PRP": "PRP", "PRP$": "PRPS",
    "JJ": "JJ", "JJR": "JJR", "JJS": "JJS",
    "RB": "RB", "RBR": "RBR", "RBS": "RBS",
    "CC": "CC", "IN": "IN", "MD": "MD", "DT": "DT", "CD": "CD", "UH": "UH",
    "WP": "WP", "WP$": "WP", "EX": "EX", "TO": "TO",
}

# Closed classes, listed exhaustively so they never depend on Brill's choices.
CURATED = {
    "PRP": """i me you he him she it we us they them myself yourself himself herself
        itself ourselves yourselves themselves thou thee ye thyself tis
        mine yours hers ours theirs thine""",
    "PRPS": "my your his her its our their thy",
    "CC": "and but or nor yet plus either neither both whether",
    "MD": """can could may might must shall should will would ought wilt shalt canst
        couldst wouldst shouldst mayst mightst durst""",
    "DT": """the a an this that these those each every some any no another all such
        either neither half""",
    "EX": "there",
    "TO": "to",
    "WP": "who whom whose what whoever whomever whatsoever whoso",
    "IN": """of in on at by for with from into onto upon about above across after
        against along amid among around as before behind below beneath beside besides
        between beyond despite down during except inside like near off out outside over
        past since than through throughout till toward towards under underneath until
        unto up via within without o'er gainst ere whilst while although though
        because if unless whereas lest betwixt twixt amongst amidst""",
    "RB": """not never ne'er e'er ever aye hither thither whither hence thence
        whence anon forsooth perchance haply mayhap belike withal thereto therefore
        here now then too very also only even still again already always often soon
        yea""",
    "RBR": "more less better worse further farther rather sooner later",
    "RBS": "most least best worst",
    "UH": "o oh ah alas nay fie ho la lo prithee pray tush pish heigh welladay alack",
    "VBZ": "is has does doth hath says saith methinks goes",
    "VBP": "am are art dost hast wast wert do have",
    "VBD": "was were did had didst hadst said",
    "VB": "be",
    "VBN": "been done gone",
    "CD": """zero one two three four five six seven eight nine ten eleven twelve
        thirteen fourteen fifteen sixteen seventeen eighteen nineteen twenty thirty
        forty fifty sixty seventy eighty ninety hundred thousand""",
    "NN": "sirrah",
}

# Negation cues; Early Modern forms appended to VADER's list.
EXTRA_NEGATORS = ["no", "nay", "naught", "nought", "nothing", "ne'er", "none", "neither"]

TOPICS = {
    "fall": "autumn autumnal fall harvest reap reaped reaping sickle leaves leaf wither withered fading fade sere stubble michaelmas",
    "summer": "summer summers summer's june july august heat hot sun sunny sunshine warm warmth midsummer noon bloom blossom roses",
    "weather": """weather rain raining rains rainy wind winds windy storm storms stormy
        tempest tempests thunder thundering lightning cloud clouds cloudy snow snows
        frost frosty hail fog mist misty gust gusts breeze blast blasts drizzle shower
        showers sunshine sky skies dew hurricane""",
    "winter": "winter winters winter's cold frost frozen freeze ice icy snow december january chill bleak",
    "spring": "spring april blossom bud buds green lambs flowers flower birds",
    "love": "love loves loved lover lovers loving beloved sweetheart kiss kisses affection adore passion heart hearts wooing woo wooed",
    "death": "death dead die dies died dying grave graves tomb tombs corpse murder murdered kill killed slain slay funeral mortal",
    "war": "war wars battle battles sword swords soldier soldiers army armies fight fought enemy enemies siege drum drums arms",
    "religion": "god gods heaven heavens pray prayer prayers holy saint saints angel angels soul souls church priest friar sin sins",
    "money": "gold silver money coin coins ducat ducats crown crowns purse wealth rich poor debt pay paid price",
    "royalty": "king kings queen queens prince princes princess crown throne majesty royal lord lords duke duchess court",
    "nature": "tree trees forest wood woods field fields flower flowers river sea seas mountain earth grass stone",
}


def _fetch(dest: Path) -> tuple[Path, Path]:
    subprocess.run(
        [sys.executable, "-m", "pip", "download", "--no-deps", "-d", str(dest),
         "pattern3==3.0.0", "vaderSentiment==3.3.2"],
        check=True,
    )
    return _locate(dest)


def _locate(folder: Path) -> tuple[Path, Path]:
    pattern = next(folder.glob("pattern3-*.tar.gz"))
    vader = next(folder.glob("vaderSentiment-*.whl"))
    return pattern, vader


def _brill_rows(archive: Path) -> list[tuple[str, str]]:
    with tarfile.open(archive) as tf:
        member = next(m for m in tf.getmembers() if m.name.endswith("text/en/en-lexicon.txt"))
        text = tf.extractfile(member).read().decode("utf-8")
    rows = []
    for line in text.splitlines():
        if line.startswith(";;;"):
            continue
        parts = line.split()
        if len(parts) < 2 or not WORD.match(parts[0]):
            continue
        tag = BRILL_TO_TAGSET.get(parts[1].split("|")[0], "OTHER")
        rows.append((parts[0], tag))
    return rows


def build_pos(archive: Path) -> list[tuple[str, str]]:
    out: dict[str, str] = {}
    for tag, words in CURATED.items():
        for w in words.split():
            if WORD.match(w):
                out.setdefault(w, tag)
    rows = _brill_rows(archive)
    # lowercase originals first so "better JJR" beats "Better NNP"
    for word, tag in rows:
        if word == word.lower():
            out.setdefault(word, tag)
    for word, tag in rows:
        out.setdefault(word.lower(), tag)
    return list(out.items())


def build_sentiment(wheel: Path) -> tuple[list[tuple[str, float]], list[str]]:
    with zipfile.ZipFile(wheel) as zf:
        lex = zf.read("vaderSentiment/vader_lexicon.txt").decode("utf-8")
        src = zf.read("vaderSentiment/vaderSentiment.py").decode("utf-8")
    valence: dict[str, float] = {}
    for line in io.StringIO(lex):
        parts = line.rstrip("\n").split("\t")
        if len(parts) < 2 or not WORD.match(parts[0]):
            continue
        valence.setdefault(parts[0].lower(), float(parts[1]))
    block = src[src.index("NEGATE"):]
    block = block[: block.index("]") + 1]
    negators = list(dict.fromkeys(re.findall(r'"([^"]+)"', block) + EXTRA_NEGATORS))
    return sorted(valence.items()), negators


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--from", dest="source", type=Path, help="folder with downloaded archives")
    args = ap.parse_args(argv)

    with tempfile.TemporaryDirectory() as tmp:
        pattern, vader = _locate(args.source) if args.source else _fetch(Path(tmp))
        pos = build_pos(pattern)
        valence, negators = build_sentiment(vader)

    DATA.mkdir(parents=True, exist_ok=True)
    with open(DATA / "pos_lexicon.tsv", "w", encoding="utf-8", newline="\n") as fh:
        fh.writelines(f"{w}\t{t}\n" for w, t in pos)
    with open(DATA / "sentiment.tsv", "w", encoding="utf-8", newline="\n") as fh:
        fh.writelines(f"{w}\t{v:g}\n" for w, v in valence)
    with open(DATA / "negators.txt", "w", encoding="utf-8", newline="\n") as fh:
        fh.writelines(f"{w}\n" for w in negators)
    topic_dir = DATA / "topics"
    topic_dir.mkdir(exist_ok=True)
    for name, words in TOPICS.items():
        uniq = list(dict.fromkeys(words.split()))
        with open(topic_dir / f"{name}.txt", "w", encoding="utf-8", newline="\n") as fh:
            fh.writelines(f"{w}\n" for w in uniq)
    print(f"pos={len(pos)} valence={len(valence)} negators={len(negators)} topics={len(TOPICS)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
