"""Deterministic linguistic front end: tokens, sentences, POS tags,
sentence sentiment and Soundex."""
from .lexicons import Lexicons, PosTag, default_lexicon_dir, default_lexicons, load_lexicons
from .sentiment import SentimentCategory, categorize, score_sentiment, sentiment_sum
from .soundex import soundex_code
from .tagger import tag_pos, tag_word
from .tokens import (
    DEFAULT_ABBREVIATIONS,
    NUMBER,
    PUNCT,
    WORD,
    Sentence,
    Token,
    segment_sentences,
    tokenize,
)

__all__ = [
    "DEFAULT_ABBREVIATIONS",
    "Lexicons",
    "NUMBER",
    "PUNCT",
    "PosTag",
    "Sentence",
    "SentimentCategory",
    "Token",
    "WORD",
    "categorize",
    "default_lexicon_dir",
    "default_lexicons",
    "load_lexicons",
    "score_sentiment",
    "segment_sentences",
    "sentiment_sum",
    "soundex_code",
    "tag_pos",
    "tag_word",
    "tokenize",
]
