"""Stylometric descriptor extraction.

Every document maps to one :class:`FeatureVector` whose keys follow the
:class:`DescriptorCatalog` order. Families, in catalog order:

lexical       word/sentence length mean, std (population) and histograms
punctuation   share of 11 punctuation marks among all tokens
vocabulary    type-token ratio and segment homogeneity of frequent words
quotation     quoted spans per sentence and their mean length in words
pos           share of each tag among word+number tokens, plus grouped shares
pos_dft       mean/max non-DC DFT magnitude of tag-group occurrence series
sentiment     share of each 0-4 category, mean, std and drift across the text
readability   Automated Readability Index and Coleman-Liau index
soundex       code diversity, drift across segments, digit distribution
numbers       share of CD-tagged tokens
topics        share of words belonging to each topic word list
"""
from __future__ import annotations

import logging
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .corpus import CleanDocument
from .errors import NotCodable, NotComputable
from .textproc import (
    DEFAULT_ABBREVIATIONS,
    NUMBER,
    PUNCT,
    WORD,
    Lexicons,
    PosTag,
    Sentence,
    Token,
    score_sentiment,
    segment_sentences,
    soundex_code,
    tag_pos,
    tokenize,
)

log = logging.getLogger(__name__)

CATALOG_VERSION = "1.0"

WORD_LENGTH_BINS = 12
SENTENCE_LENGTH_BIN_WIDTH = 5
SENTENCE_LENGTH_BINS = 9  # 1-5, ..., 36-40, 41+

PUNCTUATION = (
    (".", "period"),
    (",", "comma"),
    (";", "semicolon"),
    (":", "colon"),
    ("!", "exclamation"),
    ("?", "question"),
    ("'", "apostrophe"),
    ('"', "quote"),
    ("-", "hyphen"),
    ("(", "lparen"),
    (")", "rparen"),
)

TAG_GROUPS: dict[str, frozenset[PosTag]] = {
    "noun": frozenset({PosTag.NN, PosTag.NNS, PosTag.NNP}),
    "verb": frozenset({PosTag.VB, PosTag.VBD, PosTag.VBG, PosTag.VBN, PosTag.VBP, PosTag.VBZ}),
    "adjective": frozenset({PosTag.JJ, PosTag.JJR, PosTag.JJS}),
    "adverb": frozenset({PosTag.RB, PosTag.RBR, PosTag.RBS}),
    "pronoun": frozenset({PosTag.PRP, PosTag.PRPS}),
}

GROUPED_POS = (
    ("noun_freq", (PosTag.NN, PosTag.NNS, PosTag.NNP)),
    ("verb_freq", (PosTag.VB, PosTag.VBD, PosTag.VBG, PosTag.VBN, PosTag.VBP, PosTag.VBZ)),
    ("pronoun_freq", (PosTag.PRP, PosTag.PRPS)),
    ("adjective_freq", (PosTag.JJ,)),
    ("adjective_comparative", (PosTag.JJR,)),
    ("adjective_superlative", (PosTag.JJS,)),
    ("adverb_comparative", (PosTag.RBR,)),
    ("adverb_superlative", (PosTag.RBS,)),
    ("conjunction_freq", (PosTag.CC,)),
    ("modal_freq", (PosTag.MD,)),
)

SOUNDEX_DIGITS = "0123456"


@dataclass(frozen=True)
class FeatureConfig:
    homogeneity_segments: int = 20
    homogeneity_min_count: int = 5
    drift_segments: int = 10
    dft_bins: int = 32
    abbreviations: tuple[str, ...] = DEFAULT_ABBREVIATIONS

    def __post_init__(self):
        if self.homogeneity_segments < 1 or self.drift_segments < 1:
            raise ValueError("segment counts must be positive")
        if self.dft_bins < 2:
            raise ValueError("dft_bins must be at least 2")


@dataclass(frozen=True)
class Descriptor:
    name: str
    family: str
    # shares and histogram bins: bounded by [0, 1] and unchanged by repeating the text
    frequency: bool = False


@dataclass(frozen=True)
class DescriptorCatalog:
    descriptors: tuple[Descriptor, ...]
    version: str = CATALOG_VERSION

    def __post_init__(self):
        names = [d.name for d in self.descriptors]
        if len(set(names)) != len(names):
            raise ValueError("descriptor names must be unique")

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(d.name for d in self.descriptors)

    def family(self, family: str) -> tuple[str, ...]:
        return tuple(d.name for d in self.descriptors if d.family == family)

    def __len__(self) -> int:
        return len(self.descriptors)

    def __getitem__(self, name: str) -> Descriptor:
        for d in self.descriptors:
            if d.name == name:
                return d
        raise KeyError(name)


@dataclass(frozen=True)
class FeatureVector:
    doc_id: str
    values: Mapping[str, float]
    warnings: tuple[str, ...] = field(default=())

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.values)

    def as_array(self) -> np.ndarray:
        return np.fromiter(self.values.values(), dtype=float, count=len(self.values))


def _word_hist_names() -> list[str]:
    return [f"word_length_hist_{i}" for i in range(1, WORD_LENGTH_BINS)] + [
        f"word_length_hist_{WORD_LENGTH_BINS}plus"
    ]


def _sentence_hist_names() -> list[str]:
    w = SENTENCE_LENGTH_BIN_WIDTH
    names = [f"sentence_length_hist_{i * w + 1}_{(i + 1) * w}" for i in range(SENTENCE_LENGTH_BINS - 1)]
    return names + [f"sentence_length_hist_{(SENTENCE_LENGTH_BINS - 1) * w + 1}plus"]


def build_catalog(topics: Iterable[str]) -> DescriptorCatalog:
    d: list[Descriptor] = []
    add = lambda family, names, freq=False: d.extend(Descriptor(n, family, freq) for n in names)  # noqa: E731

    add("lexical", ["word_length_mean", "word_length_std"])
    add("lexical", _word_hist_names(), True)
    add("lexical", ["sentence_length_mean", "sentence_length_std"])
    add("lexical", _sentence_hist_names(), True)
    add("punctuation", [f"freq_{name}" for _, name in PUNCTUATION], True)
    add("vocabulary", ["word_diversity", "word_homogeneity_mean", "word_homogeneity_std"])
    add("quotation", ["quote_freq", "quote_length_mean"])
    add("pos", [f"pos_{t.value.lower()}" for t in PosTag], True)
    add("pos", [name for name, _ in GROUPED_POS], True)
    add("pos_dft", [f"dft_{g}_{stat}" for g in TAG_GROUPS for stat in ("mean", "max")])
    add("sentiment", [f"sent_freq_{c}" for c in range(5)], True)
    add("sentiment", ["sentiment_mean", "sentiment_std", "sentiment_drift"])
    add("readability", ["ari", "coleman_liau"])
    add("soundex", ["soundex_diversity", "soundex_drift"])
    add("soundex", [f"soundex_digit_freq_{c}" for c in SOUNDEX_DIGITS], True)
    add("numbers", ["number_freq"], True)
    add("topics", [f"topic_{t}_freq" for t in sorted(topics)], True)
    return DescriptorCatalog(tuple(d))


def catalog_for(lex: Lexicons) -> DescriptorCatalog:
    return build_catalog(lex.topics)


# ---------------------------------------------------------------------------
# helpers

def _segment_bounds(n: int, segments: int) -> list[tuple[int, int]]:
    """Split range(n) into ``segments`` contiguous, near-equal pieces."""
    return [(s * n // segments, (s + 1) * n // segments) for s in range(segments)]


def _mean_std(values: Sequence[float]) -> tuple[float, float]:
    if len(values) == 0:
        return 0.0, 0.0
    arr = np.asarray(values, dtype=float)
    return float(arr.mean()), float(arr.std())


def _letters(surface: str) -> int:
    return sum(1 for c in surface if c.isalpha())


def _words(tokens: Iterable[Token]) -> list[Token]:
    return [t for t in tokens if t.kind == WORD]


# ---------------------------------------------------------------------------
# descriptor families

def lexical_stats(sentences: Sequence[Sentence]) -> dict[str, float]:
    word_lengths = [_letters(t.surface) for s in sentences for t in s.tokens if t.kind == WORD]
    sent_lengths = [s.n_words for s in sentences]

    out: dict[str, float] = {}
    out["word_length_mean"], out["word_length_std"] = _mean_std(word_lengths)
    hist = np.zeros(WORD_LENGTH_BINS)
    for n in word_lengths:
        hist[min(max(n, 1), WORD_LENGTH_BINS) - 1] += 1
    if word_lengths:
        hist /= len(word_lengths)
    out.update(zip(_word_hist_names(), hist.tolist()))

    if any(sent_lengths):
        out["sentence_length_mean"], out["sentence_length_std"] = _mean_std(sent_lengths)
    else:
        out["sentence_length_mean"] = out["sentence_length_std"] = 0.0
    shist = np.zeros(SENTENCE_LENGTH_BINS)
    for n in sent_lengths:
        shist[min(max(n - 1, 0) // SENTENCE_LENGTH_BIN_WIDTH, SENTENCE_LENGTH_BINS - 1)] += 1
    if word_lengths:
        shist /= len(sent_lengths)
    else:
        shist[:] = 0.0
    out.update(zip(_sentence_hist_names(), shist.tolist()))
    return out


def punctuation_freqs(tokens: Sequence[Token]) -> dict[str, float]:
    counts = Counter(t.surface for t in tokens if t.kind == PUNCT)
    total = len(tokens)
    return {f"freq_{name}": (counts[ch] / total if total else 0.0) for ch, name in PUNCTUATION}


def word_homogeneity(words: Sequence[str], segments: int = 20, min_count: int = 5) -> list[float]:
    """Per-type spread scores h_w for word types occurring at least ``min_count`` times.

    h_w = sum_s |c_ws - c_w/S| / (S * c_w): zero for a perfectly even spread.
    """
    n = len(words)
    if n == 0:
        return []
    totals = Counter(words)
    frequent = sorted(w for w, c in totals.items() if c >= min_count)
    if not frequent:
        return []
    index = {w: i for i, w in enumerate(frequent)}
    grid = np.zeros((len(frequent), segments))
    for s, (lo, hi) in enumerate(_segment_bounds(n, segments)):
        for w in words[lo:hi]:
            i = index.get(w)
            if i is not None:
                grid[i, s] += 1
    c = grid.sum(axis=1)
    dev = np.abs(grid - (c / segments)[:, None]).sum(axis=1)
    return (dev / (segments * c)).tolist()


def vocabulary_stats(tokens: Sequence[Token], segments: int = 20, min_count: int = 5) -> dict[str, float]:
    words = [t.surface.lower() for t in tokens if t.kind == WORD]
    if not words:
        return {"word_diversity": 0.0, "word_homogeneity_mean": 0.0, "word_homogeneity_std": 0.0}
    h = word_homogeneity(words, segments, min_count)
    mean, std = _mean_std(h)
    return {
        "word_diversity": len(set(words)) / len(words),
        "word_homogeneity_mean": mean,
        "word_homogeneity_std": std,
    }


def quotation_stats(tokens: Sequence[Token], n_sentences: int) -> dict[str, float]:
    """Straight double quotes paired left to right; a trailing unpaired one is ignored."""
    spans: list[int] = []
    inside = False
    count = 0
    for t in tokens:
        if t.kind == PUNCT and t.surface == '"':
            if inside:
                spans.append(count)
            inside, count = not inside, 0
        elif inside and t.kind == WORD:
            count += 1
    return {
        "quote_freq": len(spans) / n_sentences if n_sentences else 0.0,
        "quote_length_mean": float(np.mean(spans)) if spans else 0.0,
    }


def pos_freqs(tags: Sequence[PosTag]) -> dict[str, float]:
    counts = Counter(tags)
    total = len(tags)
    share = {t: (counts[t] / total if total else 0.0) for t in PosTag}
    out = {f"pos_{t.value.lower()}": share[t] for t in PosTag}
    for name, members in GROUPED_POS:
        out[name] = math.fsum(share[t] for t in members)
    return out


def occurrence_series(tags: Sequence[PosTag], group: frozenset[PosTag], bins: int) -> np.ndarray:
    """Fraction of tokens in each of ``bins`` equal bins that belong to ``group``."""
    x = np.zeros(bins)
    for b, (lo, hi) in enumerate(_segment_bounds(len(tags), bins)):
        if hi > lo:
            x[b] = sum(1 for t in tags[lo:hi] if t in group) / (hi - lo)
    return x


def dft_summary(x: np.ndarray) -> tuple[float, float]:
    """Mean and max of |X_k|/B for k = 1..B/2 (DC excluded)."""
    b = len(x)
    mags = np.abs(np.fft.rfft(x))[1 : b // 2 + 1] / b
    return float(mags.mean()), float(mags.max())


def pos_dft(tags: Sequence[PosTag], group: str, bins: int = 32) -> dict[str, float]:
    keys = (f"dft_{group}_mean", f"dft_{group}_max")
    if len(tags) < bins:
        return dict.fromkeys(keys, 0.0)
    mean, peak = dft_summary(occurrence_series(tags, TAG_GROUPS[group], bins))
    return {keys[0]: mean, keys[1]: peak}


def pos_dft_features(tags: Sequence[PosTag], bins: int = 32) -> dict[str, float]:
    out: dict[str, float] = {}
    for group in TAG_GROUPS:
        out.update(pos_dft(tags, group, bins))
    return out


def sentiment_features(categories: Sequence[int], segments: int = 10) -> dict[str, float]:
    n = len(categories)
    out = {f"sent_freq_{c}": 0.0 for c in range(5)}
    if n == 0:
        out.update(sentiment_mean=0.0, sentiment_std=0.0, sentiment_drift=0.0)
        return out
    counts = Counter(int(c) for c in categories)
    for c in range(5):
        out[f"sent_freq_{c}"] = counts[c] / n
    out["sentiment_mean"], out["sentiment_std"] = _mean_std(categories)
    seg_means = [float(np.mean(categories[lo:hi])) for lo, hi in _segment_bounds(n, segments) if hi > lo]
    out["sentiment_drift"] = float(np.std(seg_means)) if len(seg_means) > 1 else 0.0
    return out


def automated_readability_index(chars: int, words: int, sentences: int) -> float:
    return 4.71 * chars / words + 0.5 * words / sentences - 21.43


def coleman_liau_index(letters: int, words: int, sentences: int) -> float:
    return 0.0588 * (100.0 * letters / words) - 0.296 * (100.0 * sentences / words) - 15.8


def readability_indices(tokens: Sequence[Token], n_sentences: int) -> dict[str, float]:
    """ARI uses letters+digits per word; Coleman-Liau uses letters per 100 words.

    Words here are word and number tokens.
    """
    words = [t for t in tokens if t.kind in (WORD, NUMBER)]
    if not words or n_sentences == 0:
        raise NotComputable("readability needs at least one word and one sentence")
    letters = sum(_letters(t.surface) for t in words)
    chars = sum(1 for t in words for c in t.surface if c.isalnum())
    return {
        "ari": automated_readability_index(chars, len(words), n_sentences),
        "coleman_liau": coleman_liau_index(letters, len(words), n_sentences),
    }


def _codes(tokens: Iterable[Token]) -> list[str]:
    out = []
    for t in tokens:
        if t.kind != WORD:
            continue
        try:
            out.append(soundex_code(t.surface))
        except NotCodable:
            pass
    return out


def _cosine(a: Counter, b: Counter) -> float:
    dot = sum(v * b[k] for k, v in a.items())
    na = math.sqrt(sum(v * v for v in a.values()))
    nb = math.sqrt(sum(v * v for v in b.values()))
    return dot / (na * nb)


def soundex_features(tokens: Sequence[Token], segments: int = 10) -> dict[str, float]:
    n_words = sum(1 for t in tokens if t.kind == WORD)
    codes = _codes(tokens)
    out = {"soundex_diversity": 0.0, "soundex_drift": 0.0}
    out.update({f"soundex_digit_freq_{c}": 0.0 for c in SOUNDEX_DIGITS})
    if not codes:
        return out
    out["soundex_diversity"] = len(set(codes)) / n_words
    segs = [Counter(codes[lo:hi]) for lo, hi in _segment_bounds(len(codes), segments)]
    dists = [1.0 - _cosine(a, b) for a, b in zip(segs, segs[1:]) if a and b]
    out["soundex_drift"] = max(0.0, float(np.mean(dists))) if dists else 0.0
    digits = Counter(ch for code in codes for ch in code[1:])
    total = 3 * len(codes)
    for c in SOUNDEX_DIGITS:
        out[f"soundex_digit_freq_{c}"] = digits[c] / total
    return out


def number_usage(tags: Sequence[PosTag]) -> dict[str, float]:
    total = len(tags)
    return {"number_freq": sum(1 for t in tags if t is PosTag.CD) / total if total else 0.0}


def topic_freqs(tokens: Sequence[Token], topics: Mapping[str, frozenset[str]]) -> dict[str, float]:
    words = [t.surface.lower() for t in tokens if t.kind == WORD]
    n = len(words)
    out = {}
    for name in sorted(topics):
        vocab = topics[name]
        out[f"topic_{name}_freq"] = sum(1 for w in words if w in vocab) / n if n else 0.0
    return out


# ---------------------------------------------------------------------------
# pipeline

@dataclass(frozen=True)
class AnalyzedDocument:
    doc_id: str
    tokens: tuple[Token, ...]
    sentences: tuple[Sentence, ...]
    tags: tuple[PosTag, ...]
    categories: tuple[int, ...]


def analyze(doc: CleanDocument | str, lex: Lexicons, config: FeatureConfig = FeatureConfig()) -> AnalyzedDocument:
    text = doc if isinstance(doc, str) else doc.text
    doc_id = "" if isinstance(doc, str) else doc.id
    tokens = tokenize(text)
    sentences = segment_sentences(text, config.abbreviations, tokens=tokens)
    tags = tuple(tag for s in sentences for _, tag in tag_pos(s, lex))
    categories = tuple(int(score_sentiment(s, lex)) for s in sentences)
    return AnalyzedDocument(doc_id, tuple(tokens), tuple(sentences), tags, categories)


def extract_all(
    doc: CleanDocument | str, lex: Lexicons, config: FeatureConfig = FeatureConfig()
) -> FeatureVector:
    a = analyze(doc, lex, config)
    warnings: list[str] = []
    n_sent = len(a.sentences)

    parts: dict[str, float] = {}
    parts.update(lexical_stats(a.sentences))
    parts.update(punctuation_freqs(a.tokens))
    parts.update(vocabulary_stats(a.tokens, config.homogeneity_segments, config.homogeneity_min_count))
    parts.update(quotation_stats(a.tokens, n_sent))
    parts.update(pos_freqs(a.tags))
    parts.update(pos_dft_features(a.tags, config.dft_bins))
    parts.update(sentiment_features(a.categories, config.drift_segments))
    if n_sent == 0:
        warnings.append("no sentences: sentiment descriptors set to 0")
    try:
        parts.update(readability_indices(a.tokens, n_sent))
    except NotComputable as exc:
        parts.update(ari=0.0, coleman_liau=0.0)
        warnings.append(f"readability: {exc}")
    parts.update(soundex_features(a.tokens, config.drift_segments))
    parts.update(number_usage(a.tags))
    parts.update(topic_freqs(a.tokens, lex.topics))

    catalog = catalog_for(lex)
    values = {name: float(parts[name]) for name in catalog.names}
    for w in warnings:
        log.warning("%s: %s", a.doc_id or "<text>", w)
    return FeatureVector(doc_id=a.doc_id, values=values, warnings=tuple(warnings))


_worker_state: dict = {}


def _init_worker(lex: Lexicons, config: FeatureConfig) -> None:
    _worker_state["lex"] = lex
    _worker_state["config"] = config


def _extract_worker(doc: CleanDocument) -> FeatureVector:
    return extract_all(doc, _worker_state["lex"], _worker_state["config"])


def extract_many(
    docs: Sequence[CleanDocument], lex: Lexicons, config: FeatureConfig = FeatureConfig(), jobs: int = 1
) -> list[FeatureVector]:
    """Extract vectors for ``docs``, in input order whatever ``jobs`` is."""
    if jobs <= 1 or len(docs) < 2:
        return [extract_all(d, lex, config) for d in docs]
    with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker, initargs=(lex, config)) as pool:
        return list(pool.map(_extract_worker, docs, chunksize=1))
