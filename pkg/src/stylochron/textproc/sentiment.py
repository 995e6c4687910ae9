"""Sentence sentiment on a 0-4 ordinal scale from a valence lexicon."""
from __future__ import annotations

import enum

from .lexicons import Lexicons
from .tokens import WORD, Sentence

NEGATION_WINDOW = 3


class SentimentCategory(enum.IntEnum):
    VERY_NEGATIVE = 0
    NEGATIVE = 1
    NEUTRAL = 2
    POSITIVE = 3
    VERY_POSITIVE = 4


def sentiment_sum(words: list[str], lex: Lexicons, window: int = NEGATION_WINDOW) -> float:
    """Sum of valences of lowercased ``words``; a valence flips sign when a
    negator sits among the ``window`` preceding words."""
    total = 0.0
    for i, w in enumerate(words):
        v = lex.sentiment.get(w)
        if v is None:
            continue
        if any(p in lex.negators for p in words[max(0, i - window):i]):
            v = -v
        total += v
    return total


def categorize(s: float) -> SentimentCategory:
    if s <= -3.0:
        return SentimentCategory.VERY_NEGATIVE
    if s <= -0.5:
        return SentimentCategory.NEGATIVE
    if s < 0.5:
        return SentimentCategory.NEUTRAL
    if s < 3.0:
        return SentimentCategory.POSITIVE
    return SentimentCategory.VERY_POSITIVE


def score_sentiment(sentence: Sentence, lex: Lexicons) -> SentimentCategory:
    words = [t.surface.lower() for t in sentence.tokens if t.kind == WORD]
    return categorize(sentiment_sum(words, lex))
