"""Section-wise TF-IDF relevance of a CV with respect to a job offer.

Each CV is its own three-document corpus: description (D1), experience (D2)
and skills (D3). For a query term ``t`` and section ``d``::

    tf(t, d)  = count of t in d / number of tokens in d     (0 for an empty d)
    df(t)     = number of the 3 sections containing t
    idf(t)    = ln(3 / df(t))                               (0 when df = 0)
    tfidf     = tf * idf

A section's rating is the mean tfidf over *all* query terms, and the general
average is the mean of the three section ratings.
"""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from .corpus import CvRecord, JobOffer, job_query_text
from .errors import DomainError, EmptyQuery
from .normalize import normalize_pipeline

N_SECTIONS = 3
SECTION_NAMES = ("description", "experience", "skills")


@dataclass(frozen=True)
class SectionedCv:
    """A CV reduced to three normalized term lists (duplicates kept)."""

    cv_id: int
    sections: tuple[tuple[str, ...], tuple[str, ...], tuple[str, ...]]
    counts: tuple[Counter, Counter, Counter] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        sections = tuple(tuple(s) for s in self.sections)
        if len(sections) != N_SECTIONS:
            raise ValueError(f"expected {N_SECTIONS} sections, got {len(sections)}")
        object.__setattr__(self, "sections", sections)
        object.__setattr__(self, "counts", tuple(Counter(s) for s in sections))

    @property
    def section_lengths(self) -> tuple[int, int, int]:
        return tuple(len(s) for s in self.sections)


@dataclass(frozen=True)
class QueryTermSet:
    """Unique terms of one job offer, in first-appearance order."""

    job_id: int
    terms: tuple[str, ...]

    def __post_init__(self):
        terms = tuple(self.terms)
        if len(set(terms)) != len(terms):
            raise ValueError("query terms must be unique")
        object.__setattr__(self, "terms", terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)


@dataclass(frozen=True)
class TermScore:
    term: str
    tf: tuple[Fraction, Fraction, Fraction]
    df: int
    idf: float
    tf_idf: tuple[float, float, float]


@dataclass(frozen=True)
class RelevanceRecord:
    """Relevance of one CV for one job: three section ratings and their mean."""

    job_id: int
    cv_id: int
    rating_description: float
    rating_experience: float
    rating_skills: float
    general_average: float

    @property
    def ratings(self) -> tuple[float, float, float]:
        return (self.rating_description, self.rating_experience, self.rating_skills)

    def to_json(self) -> dict:
        return {
            "id_job": self.job_id,
            "id_cv": self.cv_id,
            "rating_description": self.rating_description,
            "rating_experience": self.rating_experience,
            "rating_skills": self.rating_skills,
            "general": self.general_average,
        }


def general_average(d1: float, d2: float, d3: float) -> float:
    return (d1 + d2 + d3) / 3


def build_query_terms(
    job: JobOffer,
    stopwords: Iterable[str] | None = None,
    lemmas: Mapping[str, str] | None = None,
) -> QueryTermSet:
    terms = normalize_pipeline(job_query_text(job), stopwords, lemmas)
    return QueryTermSet(job.id, tuple(dict.fromkeys(terms)))


def section_cv(
    cv: CvRecord,
    stopwords: Iterable[str] | None = None,
    lemmas: Mapping[str, str] | None = None,
) -> SectionedCv:
    if stopwords is not None and not isinstance(stopwords, frozenset):
        stopwords = frozenset(stopwords)
    sections = tuple(tuple(normalize_pipeline(s, stopwords, lemmas)) for s in cv.sections)
    return SectionedCv(cv.id, sections)


def term_frequency(term: str, section: Iterable[str]) -> Fraction:
    """Occurrences of ``term`` over the section's token count, as an exact ratio."""
    section = list(section)
    if not section:
        return Fraction(0)
    return Fraction(section.count(term), len(section))


def inverse_document_frequency(df: int, n: int = N_SECTIONS) -> float:
    """``ln(n / df)``, natural log; 0 for a term found in no document."""
    if not 0 <= df <= n:
        raise DomainError(f"document frequency {df} outside [0, {n}]")
    if df == 0:
        return 0.0
    return math.log(n / df)


def score_term(term: str, scv: SectionedCv) -> TermScore:
    lengths = scv.section_lengths
    tf = tuple(
        Fraction(c[term], n) if n else Fraction(0) for c, n in zip(scv.counts, lengths)
    )
    df = sum(1 for x in tf if x > 0)
    idf = inverse_document_frequency(df)
    return TermScore(term, tf, df, idf, tuple(float(x) * idf for x in tf))


def score_cv_against_job(query: QueryTermSet, scv: SectionedCv) -> RelevanceRecord:
    """Average the per-term TF-IDF of every query term over each section.

    Terms absent from the CV still count in the denominator. Sums run in the
    query's term order so the result is reproducible bit for bit.
    """
    if not len(query):
        raise EmptyQuery(f"job {query.job_id} has no query terms")
    totals = [0.0, 0.0, 0.0]
    for term in query.terms:
        ts = score_term(term, scv)
        for i in range(N_SECTIONS):
            totals[i] += ts.tf_idf[i]
    n = len(query)
    r = [t / n for t in totals]
    return RelevanceRecord(query.job_id, scv.cv_id, r[0], r[1], r[2], general_average(*r))
