import json

import pytest

from cvmatch.corpus import (
    Corpus,
    CvRecord,
    JobOffer,
    load_corpus,
    parse_cv_html,
    validate_corpus,
    write_corpus,
)
from cvmatch.errors import DuplicateId, MalformedHtml, MissingName, SchemaError


def _jsonl(path, rows):
    path.write_text("".join(json.dumps(r, ensure_ascii=False) + "\n" for r in rows), encoding="utf-8")
    return path


def _cv(**kw):
    base = {"name": "x", "description": "", "experience": "", "skills": ""}
    base.update(kw)
    return base


class TestParseCvHtml:
    def test_direct_mapping(self):
        rec = parse_cv_html(
            '<div class="cv-name">Ana</div><div class="cv-description">minería de datos</div>'
        )
        assert rec == CvRecord(None, "Ana", "minería de datos", "", "")

    def test_repeated_markers_join_with_space(self):
        rec = parse_cv_html(
            '<p class="cv-skills">scrapy</p><p class="cv-skills">python</p><span class="cv-name">Luis</span>'
        )
        assert rec.skills == "scrapy python"
        assert rec.name == "Luis"

    def test_missing_name(self):
        with pytest.raises(MissingName):
            parse_cv_html("<div>no markers</div>")

    def test_nested_markup_and_entities(self):
        html = """
        <html><body>
          <h1 class="header cv-name">  María   Pérez </h1>
          <section class="cv-experience">
            <p>Analista &amp; <b>desarrolladora</b></p><br>
            <p>Python</p>
          </section>
        </body></html>
        """
        rec = parse_cv_html(html)
        assert rec.name == "María Pérez"
        assert rec.experience == "Analista & desarrolladora Python"

    def test_unclosed_elements_are_flushed(self):
        rec = parse_cv_html('<div class="cv-name">Ana<div class="cv-skills">git')
        assert rec.skills == "git"
        assert rec.name == "Anagit"  # textContent: no separator in the source

    def test_bytes_input(self):
        rec = parse_cv_html('<p class="cv-name">Iñigo</p>'.encode())
        assert rec.name == "Iñigo"

    def test_undecodable_bytes(self):
        with pytest.raises(MalformedHtml):
            parse_cv_html(b"\xff\xfe<p class='cv-name'>x</p>")

    def test_non_text_input(self):
        with pytest.raises(MalformedHtml):
            parse_cv_html(42)


class TestLoadCorpus:
    def test_counts_and_ids(self, tmp_path):
        cvs = _jsonl(tmp_path / "c.jsonl", [_cv(name="a"), _cv(name="b")])
        jobs = _jsonl(tmp_path / "j.jsonl", [{"title": "Analista"}])
        corpus = load_corpus(cvs, jobs)
        assert [c.id for c in corpus.cvs] == [0, 1]
        assert [j.id for j in corpus.jobs] == [0]
        assert corpus.jobs[0].city == ""

    def test_empty_cv_file(self, tmp_path):
        (tmp_path / "c.jsonl").write_text("")
        jobs = _jsonl(tmp_path / "j.jsonl", [{"title": "Analista"}])
        corpus = load_corpus(tmp_path / "c.jsonl", jobs)
        assert corpus.cvs == ()

    def test_job_missing_title(self, tmp_path):
        cvs = _jsonl(tmp_path / "c.jsonl", [_cv()])
        jobs = _jsonl(tmp_path / "j.jsonl", [{"title": "a"}, {"city": "Lima"}])
        with pytest.raises(SchemaError) as err:
            load_corpus(cvs, jobs)
        assert err.value.line == 2

    def test_empty_title_rejected(self, tmp_path):
        jobs = _jsonl(tmp_path / "j.jsonl", [{"title": "  "}])
        with pytest.raises(SchemaError):
            load_corpus(_jsonl(tmp_path / "c.jsonl", []), jobs)

    def test_cv_missing_section(self, tmp_path):
        cvs = _jsonl(tmp_path / "c.jsonl", [{"name": "a", "description": "", "experience": ""}])
        with pytest.raises(SchemaError):
            load_corpus(cvs, _jsonl(tmp_path / "j.jsonl", []))

    def test_bad_json_line_number(self, tmp_path):
        p = tmp_path / "c.jsonl"
        p.write_text(json.dumps(_cv()) + "\n{not json\n")
        with pytest.raises(SchemaError) as err:
            load_corpus(p, _jsonl(tmp_path / "j.jsonl", []))
        assert err.value.line == 2

    @pytest.mark.parametrize("bad", [-1, "3", 1.5, True])
    def test_bad_id(self, tmp_path, bad):
        cvs = _jsonl(tmp_path / "c.jsonl", [_cv(id=bad)])
        with pytest.raises(SchemaError):
            load_corpus(cvs, _jsonl(tmp_path / "j.jsonl", []))

    def test_duplicate_explicit_id(self, tmp_path):
        cvs = _jsonl(tmp_path / "c.jsonl", [_cv(id=5), _cv(id=5)])
        with pytest.raises(DuplicateId) as err:
            load_corpus(cvs, _jsonl(tmp_path / "j.jsonl", []))
        assert err.value.id == 5

    def test_implicit_id_collides_with_explicit(self, tmp_path):
        cvs = _jsonl(tmp_path / "c.jsonl", [_cv(id=1), _cv()])
        with pytest.raises(DuplicateId):
            load_corpus(cvs, _jsonl(tmp_path / "j.jsonl", []))

    def test_out_of_order_ids_sorted(self, tmp_path):
        cvs = _jsonl(tmp_path / "c.jsonl", [_cv(id=7, name="b"), _cv(id=3, name="a")])
        corpus = load_corpus(cvs, _jsonl(tmp_path / "j.jsonl", []))
        assert [(c.id, c.name) for c in corpus.cvs] == [(3, "a"), (7, "b")]

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            load_corpus(tmp_path / "nope.jsonl", tmp_path / "nope2.jsonl")


def test_round_trip_is_equal_and_byte_stable(tmp_path):
    corpus = Corpus(
        [CvRecord(0, "Ana", "minería", "", "scrapy"), CvRecord(4, "Luis", "", "ñandú \"quoted\"", "")],
        [JobOffer(2, "Analista", city="Ilo", knowledge="python")],
    )
    write_corpus(corpus, tmp_path / "c.jsonl", tmp_path / "j.jsonl")
    again = load_corpus(tmp_path / "c.jsonl", tmp_path / "j.jsonl")
    assert again == corpus
    write_corpus(again, tmp_path / "c2.jsonl", tmp_path / "j2.jsonl")
    assert (tmp_path / "c.jsonl").read_bytes() == (tmp_path / "c2.jsonl").read_bytes()
    assert (tmp_path / "j.jsonl").read_bytes() == (tmp_path / "j2.jsonl").read_bytes()


def test_corpus_rejects_unsorted_ids():
    with pytest.raises(ValueError):
        Corpus([CvRecord(1, "a"), CvRecord(0, "b")], [])


class TestValidate:
    def test_empty_cv_warns(self):
        corpus = Corpus([CvRecord(3, "a")], [JobOffer(0, "Analista")])
        warnings = validate_corpus(corpus)
        assert len(warnings) == 1 and "cv 3" in warnings[0]

    def test_clean_corpus(self):
        corpus = Corpus([CvRecord(0, "a", "python")], [JobOffer(0, "Analista de datos")])
        assert validate_corpus(corpus) == []

    def test_stopword_only_job(self):
        job = JobOffer(9, "El de la", description="los en", city="Lima", company="Acme")
        corpus = Corpus([CvRecord(0, "a", "python")], [job])
        assert validate_corpus(corpus) == ["job 9: text normalizes to zero terms"]

    def test_does_not_mutate(self):
        corpus = Corpus([CvRecord(0, "a")], [JobOffer(0, "de")])
        before = repr(corpus)
        validate_corpus(corpus)
        assert repr(corpus) == before
