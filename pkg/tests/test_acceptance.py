"""Acceptance gate. Each test is one exit criterion; the terminal summary
prints a PASS/FAIL line per criterion."""

import math
import time

import numpy as np
import pytest

import oracle
from cvmatch.corpus import Corpus, CvRecord, JobOffer, load_corpus, write_corpus
from cvmatch.matrix import (
    RelevanceMatrix,
    build_matrix,
    export_matrix_csv,
    import_matrix_csv,
    min_max_normalize,
    top_k_cvs_for_job,
)
from cvmatch.normalize import lemmatize_verbs, normalize_pipeline
from cvmatch.synthetic import make_synthetic_corpus
from cvmatch.tfidf import (
    QueryTermSet,
    SectionedCv,
    build_query_terms,
    general_average,
    score_cv_against_job,
    score_term,
    section_cv,
)

VOCAB = ["python", "datos", "sistema", "scrapy", "mineria", "excel", "linux", "git", "redes", "java"]


def _random_tokens(rng, lo, hi):
    return list(rng.choice(VOCAB, size=int(rng.integers(lo, hi + 1))))


def _random_case(rng):
    jobs = [_random_tokens(rng, 1, 6) for _ in range(int(rng.integers(1, 5)))]
    cvs = [tuple(_random_tokens(rng, 0, 6) for _ in range(3)) for _ in range(int(rng.integers(1, 5)))]
    corpus = Corpus(
        [CvRecord(i, "x", *(" ".join(s) for s in secs)) for i, secs in enumerate(cvs)],
        [JobOffer(i, " ".join(t)) for i, t in enumerate(jobs)],
    )
    return corpus, jobs, cvs


@pytest.mark.criterion(1, "per-term tf-idf reproduces the five published rows within 0.0005")
def test_criterion_1_term_rows(worked_cv):
    published = {
        "mineria": (0.039, 0.081, 0),
        "scrapy": (0.019, 0, 0.081),
        "aplicar": (0.052, 0, 0),
        "sistema": (0.039, 0.081, 0),
        "recomendacion": (0.039, 0.081, 0),
    }
    start = time.perf_counter()
    scv = section_cv(worked_cv)
    assert scv.section_lengths == (21, 5, 5)
    for term, expected in published.items():
        got = score_term(term, scv).tf_idf
        for g, e in zip(got, expected):
            assert abs(g - e) <= 0.0005, (term, got, expected)
    assert time.perf_counter() - start < 1.0


@pytest.mark.criterion(2, "general average of (0.04, 0.109, 0.127) is 0.092 within 0.0005")
def test_criterion_2_general_average():
    assert abs(general_average(0.04, 0.109, 0.127) - 0.092) <= 0.0005


@pytest.mark.criterion(3, "min-max endpoints are exactly 0 and 1; 0.092 on [0, 0.549] maps to 0.16758")
def test_criterion_3_min_max():
    rng = np.random.default_rng(3)
    for _ in range(50):
        shape = tuple(rng.integers(1, 8, size=2))
        values = rng.random(shape) * rng.random()
        if values.max() == values.min():
            continue
        n = min_max_normalize(RelevanceMatrix(range(shape[0]), range(shape[1]), values))
        assert n.values.min() == 0.0 and n.values.max() == 1.0
    m = RelevanceMatrix([0, 1], [0, 1], [[0.092, 0.000], [0.004, 0.549]])
    assert abs(min_max_normalize(m).values[0, 0] - 0.16758) <= 1e-5


@pytest.mark.criterion(4, "build_matrix equals brute force on 200 random corpora within 1e-12")
def test_criterion_4_oracle_equivalence():
    rng = np.random.default_rng(20240601)
    start = time.perf_counter()
    worst = 0.0
    for _ in range(200):
        corpus, jobs, cvs = _random_case(rng)
        got = build_matrix(corpus, workers=int(rng.integers(1, 4))).values
        expected = np.array(oracle.matrix(jobs, [list(map(list, c)) for c in cvs]))
        worst = max(worst, float(np.abs(got - expected).max()))
    assert worst <= 1e-12
    assert time.perf_counter() - start < 10.0


@pytest.mark.criterion(5, "property suite: dedup, ranking under scaling, pipeline, df/tf, ln 3 bound, workers")
def test_criterion_5_properties():
    rng = np.random.default_rng(5)
    texts = [
        "Minería de Datos, aplicando Scrapy.", "trabajaba en el sistema de recomendación",
        "AÑO Über java/python c.v.", "estando escribiendo programación y análisis", "",
    ]
    for a in texts:
        once = normalize_pipeline(a)
        assert lemmatize_verbs(once) == once
        assert normalize_pipeline(" ".join(once)) == once
        for b in texts:
            assert normalize_pipeline(a + " " + b) == normalize_pipeline(a) + normalize_pipeline(b)

    for _ in range(100):
        corpus, jobs, cvs = _random_case(rng)
        cv = corpus.cvs[0]
        scv = section_cv(cv)
        q = build_query_terms(corpus.jobs[0])
        repeated = JobOffer(0, " ".join(jobs[0] * 3), knowledge=" ".join(jobs[0]))
        assert score_cv_against_job(q, scv) == score_cv_against_job(build_query_terms(repeated), scv)
        for t in q.terms:
            ts = score_term(t, scv)
            assert ts.df == sum(1 for x in ts.tf if x > 0)
            assert all(0 <= v <= math.log(3) for v in ts.tf_idf)
        rec = score_cv_against_job(q, scv)
        assert all(0 <= v <= math.log(3) for v in (*rec.ratings, rec.general_average))

        m = build_matrix(corpus, workers=1)
        assert m == build_matrix(corpus, workers=4)
        if m.values.max() > m.values.min():
            n = min_max_normalize(m)
            k = len(m.cv_ids)
            for j in m.job_ids:
                assert [c for c, _ in top_k_cvs_for_job(m, j, k)] == [c for c, _ in top_k_cvs_for_job(n, j, k)]


@pytest.mark.criterion(6, "1,000 x 1,000 synthetic corpus scored in under 60 s, identical across runs")
def test_criterion_6_throughput():
    corpus = make_synthetic_corpus(1000, 1000, section_tokens=50, seed=6)
    start = time.perf_counter()
    first = build_matrix(corpus)
    elapsed = time.perf_counter() - start
    print(f"1000x1000 scored in {elapsed:.2f} s")
    assert first.shape == (1000, 1000)
    assert elapsed < 60.0
    second = build_matrix(corpus, workers=3)
    assert first.values.tobytes() == second.values.tobytes()


@pytest.mark.criterion(7, "corpus JSONL and matrix CSV round trips")
def test_criterion_7_round_trips(tmp_path):
    corpus = make_synthetic_corpus(5, 7, section_tokens=10, seed=7)
    corpus = Corpus(
        list(corpus.cvs) + [CvRecord(9, "Iñigo Núñez", "minería \"datos\"", "", "")],
        corpus.jobs,
    )
    write_corpus(corpus, tmp_path / "c.jsonl", tmp_path / "j.jsonl")
    assert load_corpus(tmp_path / "c.jsonl", tmp_path / "j.jsonl") == corpus

    m = build_matrix(corpus)
    export_matrix_csv(m, tmp_path / "m.csv")
    back = import_matrix_csv(tmp_path / "m.csv")
    assert back.job_ids == m.job_ids and back.cv_ids == m.cv_ids
    assert np.array_equal(back.values, np.array([[float(f"{x:.6f}") for x in row] for row in m.values]))
    export_matrix_csv(back, tmp_path / "m2.csv")
    assert (tmp_path / "m.csv").read_bytes() == (tmp_path / "m2.csv").read_bytes()
