"""Tokenizer and sentence segmenter."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple

WORD = "word"
NUMBER = "number"
PUNCT = "punct"

TERMINATORS = frozenset(".!?")
DEFAULT_ABBREVIATIONS = ("Mr", "Mrs", "St", "Dr")

# letters with internal apostrophes/hyphens | digits with internal , or . | any other char
_TOKEN_RE = re.compile(
    r"(?P<word>[^\W\d_]+(?:['’-][^\W\d_]+)*)"
    r"|(?P<number>\d+(?:[.,]\d+)*)"
    r"|(?P<punct>\S)"
)


class Token(NamedTuple):
    surface: str
    kind: str
    start: int
    end: int


@dataclass(frozen=True)
class Sentence:
    tokens: tuple[Token, ...]
    index: int

    @property
    def words(self) -> list[Token]:
        return [t for t in self.tokens if t.kind == WORD]

    @property
    def n_words(self) -> int:
        return sum(1 for t in self.tokens if t.kind == WORD)


def tokenize(text: str) -> list[Token]:
    """Split ``text`` into word, number and punctuation tokens (no lowercasing)."""
    return [Token(m.group(), m.lastgroup, m.start(), m.end()) for m in _TOKEN_RE.finditer(text)]


def segment_sentences(
    doc,
    abbreviations: tuple[str, ...] = DEFAULT_ABBREVIATIONS,
    tokens: list[Token] | None = None,
) -> list[Sentence]:
    """Group tokens into sentences ending at ``.``, ``!`` or ``?``.

    A period directly after a listed abbreviation does not end a sentence.
    Runs of terminators ("?!", "...") stay with the sentence they close, and
    punctuation that precedes any word is carried into the next sentence, so
    every sentence of a document with words holds at least one word.
    """
    text = doc if isinstance(doc, str) else doc.text
    if tokens is None:
        tokens = tokenize(text)
    abbrev = {a.lower() for a in abbreviations}

    sentences: list[list[Token]] = []
    buf: list[Token] = []
    has_word = False
    closing = False
    for tok in tokens:
        is_term = tok.kind == PUNCT and tok.surface in TERMINATORS
        if closing:
            if is_term:
                buf.append(tok)
                continue
            sentences.append(buf)
            buf, has_word, closing = [], False, False
        if is_term and has_word:
            prev = buf[-1]
            if not (tok.surface == "." and prev.kind == WORD and prev.surface.lower() in abbrev):
                closing = True
        buf.append(tok)
        if tok.kind != PUNCT:
            has_word = True
    if buf:
        if has_word or not sentences:
            sentences.append(buf)
        else:
            sentences[-1].extend(buf)
    return [Sentence(tuple(s), i) for i, s in enumerate(sentences)]
