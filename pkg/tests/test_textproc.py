import pickle
import re
import string

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stylochron.errors import NotCodable, SchemaError
from stylochron.textproc import (
    NUMBER,
    PUNCT,
    WORD,
    Lexicons,
    PosTag,
    SentimentCategory,
    categorize,
    load_lexicons,
    score_sentiment,
    segment_sentences,
    sentiment_sum,
    soundex_code,
    tag_pos,
    tag_word,
    tokenize,
)

TINY = Lexicons(
    pos={"could": PosTag.MD, "he": PosTag.PRP, "runs": PosTag.VBZ, "the": PosTag.DT},
    sentiment={"good": 2.0, "joy": 2.0, "bad": -2.0},
    negators={"not", "never"},
    topics={"summer": frozenset({"summer"})},
)


def kinds(text):
    return [(t.surface, t.kind) for t in tokenize(text)]


class TestTokenize:
    def test_empty(self):
        assert tokenize("") == []

    def test_apostrophe_word(self):
        assert kinds("o'er the moon!") == [("o'er", WORD), ("the", WORD), ("moon", WORD), ("!", PUNCT)]

    def test_number(self):
        assert kinds("1601") == [("1601", NUMBER)]
        assert kinds("1,000 and 3.5") == [("1,000", NUMBER), ("and", WORD), ("3.5", NUMBER)]

    def test_hyphen_and_curly_apostrophe(self):
        assert kinds("well-met ne’er") == [("well-met", WORD), ("ne’er", WORD)]

    def test_offsets_point_into_text(self):
        text = "  Hark!  who's there?\n"
        for tok in tokenize(text):
            assert text[tok.start:tok.end] == tok.surface

    @settings(max_examples=200)
    @given(st.text())
    def test_tokens_cover_non_space(self, text):
        toks = tokenize(text)
        assert "".join(t.surface for t in toks) == "".join(text.split())
        assert all(a.end <= b.start for a, b in zip(toks, toks[1:]))


class TestSegment:
    def test_empty(self):
        assert segment_sentences("") == []

    def test_two_sentences(self):
        s = segment_sentences("A b. C d!")
        assert [x.n_words for x in s] == [2, 2]

    def test_abbreviation(self):
        assert len(segment_sentences("Mr. Smith ran.")) == 1

    def test_terminator_run_absorbed(self):
        s = segment_sentences("What?! No... yes.")
        assert [[t.surface for t in x.words] for x in s] == [["What"], ["No"], ["yes"]]

    def test_unterminated_tail_is_a_sentence(self):
        s = segment_sentences("One. Two three")
        assert [x.n_words for x in s] == [1, 2]

    def test_newlines_do_not_split(self):
        assert len(segment_sentences("To be,\nor not to be.")) == 1

    @settings(max_examples=200)
    @given(st.text(alphabet=string.ascii_letters + " .!?,\n'\"-0123456789"))
    def test_partition(self, text):
        toks = tokenize(text)
        sents = segment_sentences(text)
        assert [t for s in sents for t in s.tokens] == toks
        assert [s.index for s in sents] == list(range(len(sents)))


class TestTagger:
    def test_suffix_rule(self):
        assert tag_word("swiftly", TINY) == PosTag.RB
        assert tag_word("fairest", TINY) == PosTag.JJS
        assert tag_word("singing", TINY) == PosTag.VBG
        assert tag_word("walked", TINY) == PosTag.VBD
        assert tag_word("swords", TINY) == PosTag.NNS

    def test_suffix_needs_stem(self):
        assert tag_word("s", TINY) == PosTag.NN
        assert tag_word("ed", TINY) == PosTag.NN

    def test_lexicon_and_fallbacks(self):
        assert tag_word("could", TINY) == PosTag.MD
        assert tag_word("Could", TINY) == PosTag.MD
        assert tag_word("Verona", TINY, sentence_initial=False) == PosTag.NNP
        assert tag_word("Verona", TINY, sentence_initial=True) == PosTag.NN

    def test_numbers_and_punct(self):
        (s,) = segment_sentences("He runs 17 miles, quickly.")
        tags = [tag for _, tag in tag_pos(s, TINY)]
        assert tags == [PosTag.PRP, PosTag.VBZ, PosTag.CD, PosTag.NNS, PosTag.RB]

    def test_default_lexicon_archaic(self, lex):
        assert lex.pos["thou"] == PosTag.PRP
        assert lex.pos["thy"] == PosTag.PRPS
        assert lex.pos["doth"] == PosTag.VBZ
        assert tag_word("could", lex) == PosTag.MD


class TestSentiment:
    def test_neutral(self):
        (s,) = segment_sentences("The table stood there.")
        assert score_sentiment(s, TINY) == SentimentCategory.NEUTRAL

    def test_negation(self):
        assert sentiment_sum(["not", "good"], TINY) == -2.0
        (s,) = segment_sentences("Not good.")
        assert score_sentiment(s, TINY) == SentimentCategory.NEGATIVE

    def test_window_is_three_words(self):
        assert sentiment_sum(["not", "a", "b", "good"], TINY) == -2.0
        assert sentiment_sum(["not", "a", "b", "c", "good"], TINY) == 2.0

    def test_very_positive(self):
        (s,) = segment_sentences("Joy joy joy!")
        assert score_sentiment(s, TINY) == SentimentCategory.VERY_POSITIVE

    @pytest.mark.parametrize(
        "s,cat",
        [(-3.0, 0), (-2.9, 1), (-0.5, 1), (-0.49, 2), (0.0, 2), (0.49, 2), (0.5, 3), (2.99, 3), (3.0, 4)],
    )
    def test_thresholds(self, s, cat):
        assert categorize(s) == cat

    @settings(max_examples=200)
    @given(st.floats(-1e6, 1e6), st.floats(-1e6, 1e6))
    def test_categorize_monotone(self, a, b):
        lo, hi = sorted((a, b))
        assert categorize(lo) <= categorize(hi)


class TestSoundex:
    @pytest.mark.parametrize(
        "word,code",
        [
            ("Robert", "R163"), ("Rupert", "R163"), ("Ashcraft", "A261"), ("Tymczak", "T522"),
            ("Pfister", "P236"), ("Honeyman", "H555"), ("a", "A000"), ("Lee", "L000"),
            ("Gutierrez", "G362"), ("o'er", "O600"),
        ],
    )
    def test_known_codes(self, word, code):
        assert soundex_code(word) == code

    def test_not_codable(self):
        with pytest.raises(NotCodable):
            soundex_code("ñ’")

    @settings(max_examples=500)
    @given(st.text(alphabet=string.ascii_letters, min_size=1, max_size=30))
    def test_shape_and_case(self, word):
        code = soundex_code(word)
        assert re.fullmatch(r"[A-Z][0-9]{3}", code)
        assert code == soundex_code(word.upper()) == soundex_code(word.lower())
        assert code[0] == word[0].upper()


class TestLexicons:
    def test_load_first_row_wins(self, tmp_path, caplog):
        (tmp_path / "pos_lexicon.tsv").write_text("# comment\nRun\tVB\nrun\tNN\n", encoding="utf-8")
        (tmp_path / "sentiment.tsv").write_text("good\t1.5\n", encoding="utf-8")
        (tmp_path / "negators.txt").write_text("Not\n", encoding="utf-8")
        (tmp_path / "topics").mkdir()
        (tmp_path / "topics" / "war.txt").write_text("Sword\n", encoding="utf-8")
        lx = load_lexicons(tmp_path)
        assert lx.pos == {"run": PosTag.VB}
        assert lx.sentiment == {"good": 1.5}
        assert lx.negators == frozenset({"not"})
        assert lx.topics == {"war": frozenset({"sword"})}
        assert "duplicate" in caplog.text

    def test_bad_rows(self, tmp_path):
        (tmp_path / "pos_lexicon.tsv").write_text("run\tXYZ\n", encoding="utf-8")
        (tmp_path / "sentiment.tsv").write_text("", encoding="utf-8")
        (tmp_path / "negators.txt").write_text("", encoding="utf-8")
        with pytest.raises(SchemaError):
            load_lexicons(tmp_path)

    def test_immutable_and_picklable(self, lex):
        with pytest.raises(TypeError):
            lex.pos["x"] = PosTag.NN
        clone = pickle.loads(pickle.dumps(TINY))
        assert dict(clone.pos) == dict(TINY.pos) and clone.negators == TINY.negators

    def test_bundled_sizes(self, lex):
        assert len(lex.pos) > 50_000
        assert len(lex.sentiment) > 5_000
        assert {"not", "never", "nay"} <= lex.negators
        assert len(lex.topics) == 12
