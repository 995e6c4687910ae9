"""Walk one passage through the linguistic front end.

Tokens, sentences, part-of-speech tags, sentence sentiment and Soundex
codes are the raw material every descriptor is built from.

    python3 demos/01_text_front_end.py
"""
from stylochron.textproc import (
    default_lexicons,
    score_sentiment,
    segment_sentences,
    sentiment_sum,
    soundex_code,
    tag_pos,
)

PASSAGE = """But, soft! what light through yonder window breaks?
It is the east, and Juliet is the sun.
Arise, fair sun, and kill the envious moon,
Who is already sick and pale with grief."""

lex = default_lexicons()

# Sentences end at . ! or ?; line breaks inside verse do not split them.
sentences = segment_sentences(PASSAGE)
print(f"{len(sentences)} sentences\n")

for s in sentences:
    words = [t.surface.lower() for t in s.words]
    tagged = " ".join(f"{tok.surface}/{tag.value}" for tok, tag in tag_pos(s, lex))
    category = score_sentiment(s, lex)
    print(tagged)
    print(f"  valence sum {sentiment_sum(words, lex):+.2f} -> {category.name.lower()} ({int(category)})\n")

# Negation flips the valence of the next few words.
for phrase in ("I love thee", "I do not love thee"):
    print(f"{phrase!r:24} sum = {sentiment_sum(phrase.lower().split(), lex):+.2f}")

# Archaic forms come from a hand-written block in the bundled lexicon.
print()
for w in ("thou", "thy", "doth", "hath", "wilt", "o'er"):
    print(f"{w:6} {lex.pos[w].value}")

print()
for name in ("Romeo", "Rosaline", "Juliet", "Julia"):
    print(f"{name:9} {soundex_code(name)}")
