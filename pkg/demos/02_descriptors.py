"""The descriptor catalog, computed for two short scenes.

    python3 demos/02_descriptors.py
"""
from stylochron import catalog_for, default_lexicons, extract_all

lex = default_lexicons()
catalog = catalog_for(lex)

families: dict[str, int] = {}
for name in catalog.names:
    families[catalog[name].family] = families.get(catalog[name].family, 0) + 1
print(f"{len(catalog)} descriptors")
for fam, n in families.items():
    print(f"  {fam:12} {n}")

merry = """Why, then the world's mine oyster, which I with sword will open.
I will retort the sum in equipage. Not a penny! I have been content, sir,
you should lay my countenance to pawn. I have grated upon my good friends
for three reprieves for you and your coach-fellow Nym; or else you had looked
through the grate, like a geminy of baboons."""

gloomy = """Tomorrow, and tomorrow, and tomorrow, creeps in this petty pace from
day to day, to the last syllable of recorded time; and all our yesterdays have
lighted fools the way to dusty death. Out, out, brief candle! Life's but a
walking shadow, a poor player, that struts and frets his hour upon the stage,
and then is heard no more. It is a tale told by an idiot, full of sound and fury,
signifying nothing."""

a = extract_all(merry, lex).values
b = extract_all(gloomy, lex).values

show = (
    "sentence_length_mean", "word_length_mean", "word_diversity", "freq_comma",
    "freq_exclamation", "pronoun_freq", "adjective_freq", "sentiment_mean",
    "ari", "coleman_liau", "soundex_diversity", "number_freq", "topic_death_freq",
)
print(f"\n{'descriptor':24}{'Falstaff':>10}{'Macbeth':>10}")
for name in show:
    print(f"{name:24}{a[name]:10.3f}{b[name]:10.3f}")

# Frequencies are shares, so a text and its doubled copy agree exactly.
doubled = extract_all(merry + "\n" + merry, lex).values
freq = [n for n in catalog.names if catalog[n].frequency]
print("\nmax change of a frequency descriptor when the text is doubled:",
      max(abs(a[n] - doubled[n]) for n in freq))
