"""Lexicon loading.

On-disk layout of a lexicon directory::

    pos_lexicon.tsv     word<TAB>tag
    sentiment.tsv       word<TAB>valence
    negators.txt        one word per line
    topics/<name>.txt   one word per line per topic
"""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from types import MappingProxyType
from typing import Mapping

from ..errors import SchemaError

log = logging.getLogger(__name__)


class PosTag(str, enum.Enum):
    NN = "NN"
    NNS = "NNS"
    NNP = "NNP"
    VB = "VB"
    VBD = "VBD"
    VBG = "VBG"
    VBN = "VBN"
    VBP = "VBP"
    VBZ = "VBZ"
    PRP = "PRP"
    PRPS = "PRPS"
    JJ = "JJ"
    JJR = "JJR"
    JJS = "JJS"
    RB = "RB"
    RBR = "RBR"
    RBS = "RBS"
    CC = "CC"
    IN = "IN"
    MD = "MD"
    DT = "DT"
    CD = "CD"
    UH = "UH"
    WP = "WP"
    EX = "EX"
    TO = "TO"
    OTHER = "OTHER"


@dataclass(frozen=True)
class Lexicons:
    pos: Mapping[str, PosTag] = field(default_factory=dict)
    sentiment: Mapping[str, float] = field(default_factory=dict)
    negators: frozenset[str] = frozenset()
    topics: Mapping[str, frozenset[str]] = field(default_factory=dict)

    def __post_init__(self):
        for name, table in (("pos", self.pos), ("sentiment", self.sentiment), ("topics", self.topics)):
            object.__setattr__(self, name, MappingProxyType(dict(table)))
        object.__setattr__(self, "negators", frozenset(self.negators))

    def __reduce__(self):
        # mappingproxy does not pickle; needed for process pools
        return (
            Lexicons,
            (dict(self.pos), dict(self.sentiment), self.negators, dict(self.topics)),
        )


def _rows(path: Path) -> list[str]:
    with open(path, encoding="utf-8") as fh:
        return [line.strip() for line in fh if line.strip() and not line.startswith("#")]


def _read_tsv(path: Path, convert) -> dict:
    table: dict = {}
    dupes = 0
    for lineno, line in enumerate(_rows(path), 1):
        parts = line.split("\t")
        if len(parts) != 2:
            raise SchemaError(f"{path}:{lineno}: expected word<TAB>value")
        word = parts[0].lower()
        if word in table:
            dupes += 1
            continue
        try:
            table[word] = convert(parts[1])
        except ValueError as exc:
            raise SchemaError(f"{path}:{lineno}: {exc}") from None
    if dupes:
        log.warning("%s: %d duplicate words ignored (first row kept)", path, dupes)
    return table


def load_lexicons(directory: str | Path) -> Lexicons:
    root = Path(directory)
    pos = _read_tsv(root / "pos_lexicon.tsv", PosTag)
    sentiment = _read_tsv(root / "sentiment.tsv", float)
    negators = frozenset(w.lower() for w in _rows(root / "negators.txt"))
    topics = {}
    topic_dir = root / "topics"
    if topic_dir.is_dir():
        for p in sorted(topic_dir.glob("*.txt")):
            topics[p.stem] = frozenset(w.lower() for w in _rows(p))
    return Lexicons(pos=pos, sentiment=sentiment, negators=negators, topics=topics)


def default_lexicon_dir() -> Path:
    return Path(str(resources.files("stylochron") / "data"))


@lru_cache(maxsize=1)
def default_lexicons() -> Lexicons:
    return load_lexicons(default_lexicon_dir())
