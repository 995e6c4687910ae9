import csv
import random
from pathlib import Path

import pytest

from stylochron.textproc import default_lexicons

ROOT = Path(__file__).resolve().parent.parent
SHAKESPEARE_MANIFEST = ROOT / "corpus" / "manifest.csv"

_VOCAB = (
    "the a and of to my thy thou love death king queen sweet good bad night day "
    "fair foul heart sword war peace lord lady speak said went going happily "
    "greatest Rome Romeo Verona not never no hate joy grief money summer winter "
    "quickly walked talking stars tears better worse o'er well-met"
).split()
_CLOSERS = (".", ".", ".", "!", "?")


def random_document(rng: random.Random, sentences: int | None = None) -> str:
    """Plain prose from a small mixed vocabulary; every sentence is closed."""
    out = []
    for _ in range(sentences or rng.randint(3, 40)):
        words = [rng.choice(_VOCAB) for _ in range(rng.randint(1, 45))]
        if rng.random() < 0.2:
            words.insert(rng.randrange(len(words) + 1), str(rng.randint(1, 2000)))
        words[0] = words[0].capitalize()
        parts = []
        for w in words:
            parts.append(w)
            r = rng.random()
            if r < 0.08:
                parts[-1] += ","
            elif r < 0.1:
                parts[-1] += ";"
        sentence = " ".join(parts) + rng.choice(_CLOSERS)
        if rng.random() < 0.15:
            sentence = f'"{sentence}"'
        out.append(sentence)
        if rng.random() < 0.2:
            out.append("\n\n")
    return " ".join(out)


def write_corpus(directory: Path, docs, name: str = "manifest.csv") -> Path:
    """docs: iterable of (id, text, year, genre). Returns the manifest path."""
    texts = directory / "texts"
    texts.mkdir(parents=True, exist_ok=True)
    manifest = directory / name
    with open(manifest, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["id", "title", "path", "year", "genre"])
        for doc_id, text, year, genre in docs:
            (texts / f"{doc_id}.txt").write_text(text, encoding="utf-8")
            w.writerow([doc_id, doc_id.title(), f"texts/{doc_id}.txt", year, genre])
    return manifest


def synthetic_plays(n: int = 24, seed: int = 7):
    rng = random.Random(seed)
    genres = ("comedy", "tragedy")
    return [
        (f"doc{i:02d}", random_document(rng, rng.randint(20, 60)), 1590 + (i * 23) % 24, genres[i % 2])
        for i in range(n)
    ]


@pytest.fixture(scope="session")
def lex():
    return default_lexicons()


@pytest.fixture
def small_corpus(tmp_path):
    return write_corpus(tmp_path / "corpus", synthetic_plays())
