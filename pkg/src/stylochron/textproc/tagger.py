"""Lexicon + suffix rule part-of-speech tagger."""
from __future__ import annotations

from .lexicons import Lexicons, PosTag
from .tokens import NUMBER, PUNCT, Sentence, Token

SUFFIX_RULES = (
    ("ly", PosTag.RB),
    ("est", PosTag.JJS),
    ("ing", PosTag.VBG),
    ("ed", PosTag.VBD),
    ("s", PosTag.NNS),
)


def tag_word(surface: str, lex: Lexicons, sentence_initial: bool = False) -> PosTag:
    lower = surface.lower()
    tag = lex.pos.get(lower)
    if tag is not None:
        return tag
    for suffix, tag in SUFFIX_RULES:
        if len(lower) > len(suffix) and lower.endswith(suffix):
            return tag
    if not sentence_initial and surface[0].isupper():
        return PosTag.NNP
    return PosTag.NN


def tag_pos(sentence: Sentence, lex: Lexicons) -> list[tuple[Token, PosTag]]:
    """Tag every word and number token of ``sentence``; punctuation is skipped.

    Resolution order: number -> CD, lexicon lookup, suffix rules,
    capitalised non-initial word -> NNP, otherwise NN.
    """
    out = []
    initial = True
    for tok in sentence.tokens:
        if tok.kind == PUNCT:
            continue
        if tok.kind == NUMBER:
            out.append((tok, PosTag.CD))
        else:
            out.append((tok, tag_word(tok.surface, lex, initial)))
        initial = False
    return out
