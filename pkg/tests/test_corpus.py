import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stylochron.corpus import (
    CleaningRules,
    Genre,
    clean_text,
    load_corpus,
    load_manifest,
)
from stylochron.errors import DuplicateId, EncodingError, MarkerOrderError, MissingFile, SchemaError

HEADER = "id,title,path,year,genre\n"


def manifest(tmp_path, body, files=("rj",)):
    (tmp_path / "texts").mkdir(exist_ok=True)
    for f in files:
        (tmp_path / "texts" / f"{f}.txt").write_text(f"Text of {f}.", encoding="utf-8")
    path = tmp_path / "manifest.csv"
    path.write_text(HEADER + body, encoding="utf-8")
    return path


class TestManifest:
    def test_header_only(self, tmp_path):
        assert len(load_manifest(manifest(tmp_path, ""))) == 0

    def test_record(self, tmp_path):
        m = load_manifest(manifest(tmp_path, "rj,Romeo and Juliet,texts/rj.txt,1596,tragedy\n"))
        rec = m.by_id("rj")
        assert (rec.year, rec.genre, rec.title) == (1596, Genre.TRAGEDY, "Romeo and Juliet")
        assert rec.path == tmp_path / "texts" / "rj.txt"

    def test_bom_and_blank_genre(self, tmp_path):
        path = manifest(tmp_path, "rj,R,texts/rj.txt,1596,\n")
        path.write_bytes(b"\xef\xbb\xbf" + path.read_bytes())
        assert load_manifest(path).by_id("rj").genre == Genre.UNKNOWN

    def test_many_rows_keep_order(self, tmp_path):
        ids = [f"p{i:02d}" for i in range(38)]
        body = "".join(f"{i},T,texts/{i}.txt,{1590 + n % 24},comedy\n" for n, i in enumerate(ids))
        m = load_manifest(manifest(tmp_path, body, files=ids))
        assert [r.id for r in m] == ids

    @pytest.mark.parametrize(
        "body,files,exc",
        [
            ("rj,R,texts/rj.txt,1596,tragedy\nrj,R,texts/rj.txt,1597,tragedy\n", ("rj",), DuplicateId),
            ("rj,R,texts/missing.txt,1596,tragedy\n", ("rj",), MissingFile),
            ("rj,R,texts/rj.txt,15x6,tragedy\n", ("rj",), ValueError),
            ("rj,R,texts/rj.txt,596,tragedy\n", ("rj",), ValueError),
            ("rj,R,texts/rj.txt,1596,farce\n", ("rj",), SchemaError),
        ],
    )
    def test_errors(self, tmp_path, body, files, exc):
        with pytest.raises(exc):
            load_manifest(manifest(tmp_path, body, files))

    def test_missing_column(self, tmp_path):
        path = tmp_path / "m.csv"
        path.write_text("id,title,path,year\n", encoding="utf-8")
        with pytest.raises(SchemaError, match="genre"):
            load_manifest(path)

    def test_out_of_era_year_warns(self, tmp_path, caplog):
        load_manifest(manifest(tmp_path, "rj,R,texts/rj.txt,1700,tragedy\n"))
        assert "outside" in caplog.text


class TestClean:
    def test_markers(self):
        rules = CleaningRules("<<BEGIN>>", "<<END>>")
        assert clean_text("HEADER\n<<BEGIN>>\nbody\n<<END>>\nfooter", rules).text == "body"

    def test_no_markers_only_line_endings(self):
        assert clean_text("a\r\nb\rc\n").text == "a\nb\nc\n"
        assert clean_text("x", CleaningRules("<<BEGIN>>", "<<END>>")).text == "x"

    def test_speaker_labels(self):
        rules = CleaningRules(strip_speaker_labels=True)
        assert clean_text("HAMLET.\nTo be, or not to be.", rules).text == "To be, or not to be."
        assert clean_text("FIRST CLOWN.\nAy.", rules).text == "Ay."
        assert clean_text("Rom.\nAy.", rules).text == "Rom.\nAy."
        assert clean_text("HAMLET.\nAy.").text == "HAMLET.\nAy."

    def test_bytes_and_bom(self):
        assert clean_text("\ufeffhi".encode()).text == "hi"
        with pytest.raises(EncodingError):
            clean_text(b"\xff\xfe bad", doc_id="x")

    def test_marker_order(self):
        with pytest.raises(MarkerOrderError):
            clean_text("<<END>> a <<BEGIN>>", CleaningRules("<<BEGIN>>", "<<END>>"))

    def test_counts(self):
        doc = clean_text("ab\ncd", doc_id="d")
        assert (doc.id, doc.char_count, doc.line_count) == ("d", 5, 2)

    @settings(max_examples=200)
    @given(st.text(), st.booleans())
    def test_idempotent_on_marker_free_bodies(self, body, strip):
        rules = CleaningRules("<<BEGIN>>", "<<END>>", strip)
        if "<<BEGIN>>" in body or "<<END>>" in body:
            return
        once = clean_text(body, rules).text
        assert clean_text(once, rules).text == once

    @settings(max_examples=100)
    @given(st.text(alphabet=st.characters(blacklist_characters="<>")))
    def test_marker_extraction_roundtrip(self, body):
        rules = CleaningRules("<<BEGIN>>", "<<END>>")
        raw = f"junk\n<<BEGIN>>{body}<<END>>junk"
        assert clean_text(raw, rules).text == clean_text(body).text.strip()


class TestLoadCorpus:
    def test_empty_and_order(self, tmp_path):
        assert load_corpus(load_manifest(manifest(tmp_path, ""))) == []
        m = load_manifest(manifest(tmp_path, "b,B,texts/b.txt,1600,\na,A,texts/a.txt,1601,\n", ("a", "b")))
        docs = load_corpus(m)
        assert [d.id for _, d in docs] == ["b", "a"]
        assert docs[0][1].text == "Text of b."

    def test_deterministic_and_parallel(self, small_corpus):
        m = load_manifest(small_corpus)
        first = load_corpus(m)
        assert first == load_corpus(m) == load_corpus(m, jobs=4)
