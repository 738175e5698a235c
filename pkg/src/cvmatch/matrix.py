"""Job x CV relevance matrix: batch scoring, min-max scaling, ranking, CSV I/O.

Rows are jobs and columns are CVs; entry ``(j, c)`` is the general average
relevance of CV ``c`` for job ``j``.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import math
import os
from collections.abc import Callable, Iterable, Mapping, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .corpus import Corpus
from .errors import AlreadyNormalized, EmptyCorpus, FormatError, UnknownCv, UnknownJob
from .tfidf import (
    N_SECTIONS,
    QueryTermSet,
    RelevanceRecord,
    SectionedCv,
    build_query_terms,
    inverse_document_frequency,
    section_cv,
)

logger = logging.getLogger(__name__)

CSV_CORNER = "id_job\\id_cv"


class RelevanceMatrix:
    """Dense grid of relevance values with row (job) and column (CV) ids.

    ``values`` is a read-only float64 array of shape ``(len(job_ids), len(cv_ids))``.
    """

    def __init__(self, job_ids: Sequence[int], cv_ids: Sequence[int], values, normalized: bool = False):
        self.job_ids = tuple(int(j) for j in job_ids)
        self.cv_ids = tuple(int(c) for c in cv_ids)
        values = np.array(values, dtype=np.float64, copy=True).reshape(
            len(self.job_ids), len(self.cv_ids)
        )
        if len(set(self.job_ids)) != len(self.job_ids) or len(set(self.cv_ids)) != len(self.cv_ids):
            raise ValueError("matrix ids must be unique")
        if values.size and not (values >= 0).all():
            raise ValueError("relevance values must be non-negative")
        if normalized and values.size and not (values <= 1).all():
            raise ValueError("normalized values must lie in [0, 1]")
        values.flags.writeable = False
        self.values = values
        self.normalized = bool(normalized)
        self._job_index = {j: i for i, j in enumerate(self.job_ids)}
        self._cv_index = {c: i for i, c in enumerate(self.cv_ids)}

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape

    def __eq__(self, other):
        if not isinstance(other, RelevanceMatrix):
            return NotImplemented
        return (
            self.job_ids == other.job_ids
            and self.cv_ids == other.cv_ids
            and self.normalized == other.normalized
            and np.array_equal(self.values, other.values)
        )

    def __repr__(self):
        flag = ", normalized" if self.normalized else ""
        return f"RelevanceMatrix({self.shape[0]} jobs x {self.shape[1]} cvs{flag})"

    def row(self, job_id: int) -> np.ndarray:
        try:
            return self.values[self._job_index[job_id]]
        except KeyError:
            raise UnknownJob(job_id) from None

    def column(self, cv_id: int) -> np.ndarray:
        try:
            return self.values[:, self._cv_index[cv_id]]
        except KeyError:
            raise UnknownCv(cv_id) from None

    def value(self, job_id: int, cv_id: int) -> float:
        row = self.row(job_id)
        if cv_id not in self._cv_index:
            raise UnknownCv(cv_id)
        return float(row[self._cv_index[cv_id]])


@dataclass(frozen=True)
class MatrixStats:
    min: float
    max: float
    mean: float
    nonzero_fraction: float


# --------------------------------------------------------------------------
# batch scoring


def _term_weights(scvs: Sequence[SectionedCv], vocab: Mapping[str, int]):
    """Sparse (vocab x 3*n_cvs) matrix of per-section tf-idf weights.

    Column ``i * n_cvs + c`` holds section ``i`` of CV ``c``. The weight of a
    term does not depend on the job, so it is computed once per CV.
    """
    n_cvs = len(scvs)
    rows, cols, data = [], [], []
    for c, scv in enumerate(scvs):
        lengths = scv.section_lengths
        seen = {}
        for counts in scv.counts:
            for term in counts:
                if term in vocab:
                    seen[term] = None
        for term in seen:
            cnt = [scv.counts[i][term] for i in range(N_SECTIONS)]
            df = sum(1 for x in cnt if x)
            idf = inverse_document_frequency(df)
            for i in range(N_SECTIONS):
                if cnt[i]:
                    rows.append(vocab[term])
                    cols.append(i * n_cvs + c)
                    data.append((cnt[i] / lengths[i]) * idf)
    return sp.csr_matrix(
        (np.array(data, dtype=np.float64), (np.array(rows, dtype=np.int64), np.array(cols, dtype=np.int64))),
        shape=(len(vocab), N_SECTIONS * n_cvs),
    )


def _query_matrix(queries: Sequence[QueryTermSet], vocab: Mapping[str, int]):
    indptr, indices = [0], []
    for q in queries:
        indices.extend(sorted(vocab[t] for t in q.terms))
        indptr.append(len(indices))
    return sp.csr_matrix(
        (np.ones(len(indices)), np.array(indices, dtype=np.int64), np.array(indptr, dtype=np.int64)),
        shape=(len(queries), len(vocab)),
    )


def _score_rows(q_rows, weights, sizes, n_cvs):
    totals = (q_rows @ weights).toarray()
    with np.errstate(invalid="ignore", divide="ignore"):
        ratings = totals / sizes[:, None]
    ratings[sizes == 0] = 0.0
    r = [ratings[:, i * n_cvs:(i + 1) * n_cvs] for i in range(N_SECTIONS)]
    return r, (r[0] + r[1] + r[2]) / 3


def score_corpus(
    corpus: Corpus,
    stopwords: Iterable[str] | None = None,
    lemmas: Mapping[str, str] | None = None,
    workers: int | None = None,
):
    """Section ratings and general averages for every (job, CV) pair.

    Returns ``(ratings, general)``: a ``(3, n_jobs, n_cvs)`` array and a
    ``(n_jobs, n_cvs)`` array. Jobs are split into contiguous row blocks
    across ``workers`` threads; each row's arithmetic is independent of the
    split, so the result is bit-identical for any worker count.
    """
    if not corpus.jobs or not corpus.cvs:
        raise EmptyCorpus(f"need at least one job and one CV (got {len(corpus.jobs)} jobs, {len(corpus.cvs)} cvs)")
    if stopwords is not None:
        stopwords = frozenset(stopwords)
    queries = [build_query_terms(j, stopwords, lemmas) for j in corpus.jobs]
    for q in queries:
        if not len(q):
            logger.warning("job %d has no query terms after normalization; scoring as zero", q.job_id)
    scvs = [section_cv(c, stopwords, lemmas) for c in corpus.cvs]

    vocab: dict[str, int] = {}
    for q in queries:
        for t in q.terms:
            vocab.setdefault(t, len(vocab))

    weights = _term_weights(scvs, vocab)
    qmat = _query_matrix(queries, vocab)
    sizes = np.array([len(q) for q in queries], dtype=np.float64)
    n_jobs, n_cvs = len(queries), len(scvs)

    workers = max(1, workers or os.cpu_count() or 1)
    bounds = np.linspace(0, n_jobs, min(workers, n_jobs) + 1).astype(int)
    blocks = list(zip(bounds[:-1], bounds[1:]))

    def run(block):
        lo, hi = block
        return _score_rows(qmat[lo:hi], weights, sizes[lo:hi], n_cvs)

    if len(blocks) == 1:
        results = [run(blocks[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(blocks)) as pool:
            results = list(pool.map(run, blocks))

    ratings = np.empty((N_SECTIONS, n_jobs, n_cvs))
    general = np.empty((n_jobs, n_cvs))
    for (lo, hi), (r, g) in zip(blocks, results):
        for i in range(N_SECTIONS):
            ratings[i, lo:hi] = r[i]
        general[lo:hi] = g
    return ratings, general


def build_matrix(
    corpus: Corpus,
    stopwords: Iterable[str] | None = None,
    lemmas: Mapping[str, str] | None = None,
    workers: int | None = None,
    sink: Callable[[RelevanceRecord], object] | None = None,
) -> RelevanceMatrix:
    """Score every CV against every job offer.

    Jobs whose text normalizes to nothing get an all-zero row and a logged
    warning. If ``sink`` is given it is called with one
    :class:`RelevanceRecord` per pair, job-major, in id order; the record's
    ``general_average`` equals the matrix entry exactly.
    """
    ratings, general = score_corpus(corpus, stopwords, lemmas, workers)
    job_ids = [j.id for j in corpus.jobs]
    cv_ids = [c.id for c in corpus.cvs]
    if sink is not None:
        for a, jid in enumerate(job_ids):
            for b, cid in enumerate(cv_ids):
                sink(
                    RelevanceRecord(
                        jid, cid,
                        float(ratings[0, a, b]), float(ratings[1, a, b]), float(ratings[2, a, b]),
                        float(general[a, b]),
                    )
                )
    return RelevanceMatrix(job_ids, cv_ids, general)


class RecordWriter:
    """JSONL sink for :func:`build_matrix`, one relevance record per line."""

    def __init__(self, fh: io.TextIOBase):
        self._fh = fh
        self.count = 0

    def __call__(self, record: RelevanceRecord):
        self._fh.write(json.dumps(record.to_json()))
        self._fh.write("\n")
        self.count += 1


# --------------------------------------------------------------------------
# post-processing and queries


def min_max_normalize(m: RelevanceMatrix) -> RelevanceMatrix:
    """Rescale every entry to ``(x - min) / (max - min)`` using the global
    extremes of the whole matrix. A constant matrix maps to all zeros."""
    if m.normalized:
        raise AlreadyNormalized("matrix is already min-max normalized")
    v = m.values
    if v.size == 0:
        return RelevanceMatrix(m.job_ids, m.cv_ids, v, normalized=True)
    lo, hi = v.min(), v.max()
    if hi == lo:
        logger.warning("matrix is constant (%g); normalizing to all zeros", lo)
        scaled = np.zeros_like(v)
    else:
        scaled = (v - lo) / (hi - lo)
    return RelevanceMatrix(m.job_ids, m.cv_ids, scaled, normalized=True)


def _top_k(ids, values, k):
    if k < 1:
        raise ValueError("k must be >= 1")
    order = sorted(range(len(ids)), key=lambda i: (-values[i], ids[i]))
    return [(ids[i], float(values[i])) for i in order[:k]]


def top_k_cvs_for_job(m: RelevanceMatrix, job_id: int, k: int) -> list[tuple[int, float]]:
    """Best ``k`` CVs for a job, highest first; ties go to the smaller CV id."""
    return _top_k(m.cv_ids, m.row(job_id), k)


def top_k_jobs_for_cv(m: RelevanceMatrix, cv_id: int, k: int) -> list[tuple[int, float]]:
    """Best ``k`` jobs for a CV, highest first; ties go to the smaller job id."""
    return _top_k(m.job_ids, m.column(cv_id), k)


def matrix_stats(m: RelevanceMatrix) -> MatrixStats:
    v = m.values
    if v.size == 0:
        return MatrixStats(0.0, 0.0, 0.0, 0.0)
    lo, hi = float(v.min()), float(v.max())
    mean = math.fsum(v.ravel().tolist()) / v.size
    # fsum is exact, the final division is not; keep min <= mean <= max
    mean = min(max(mean, lo), hi)
    return MatrixStats(lo, hi, mean, float(np.count_nonzero(v > 0)) / v.size)


# --------------------------------------------------------------------------
# CSV


def export_matrix_csv(m: RelevanceMatrix, path) -> None:
    """Write the matrix as CSV: a header ``id_job\\id_cv,<cv ids>`` then one
    row per job, values with 6 decimals."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(",".join([CSV_CORNER, *map(str, m.cv_ids)]) + "\n")
        for jid, row in zip(m.job_ids, m.values):
            fh.write(",".join([str(jid), *(f"{x:.6f}" for x in row)]) + "\n")


def _parse_id(text, line):
    try:
        value = int(text)
    except ValueError:
        raise FormatError(f"bad id {text!r}", line) from None
    if value < 0:
        raise FormatError(f"negative id {value}", line)
    return value


def import_matrix_csv(path, normalized: bool = False) -> RelevanceMatrix:
    """Read a matrix written by :func:`export_matrix_csv`.

    The CSV carries no normalization flag; pass ``normalized=True`` when
    loading a scaled matrix so it cannot be scaled twice.
    """
    with open(path, encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise FormatError("empty file", 1)
    header = rows[0]
    if not header or header[0] != CSV_CORNER:
        raise FormatError(f"header must start with {CSV_CORNER!r}", 1)
    cv_ids = [_parse_id(x, 1) for x in header[1:]]
    job_ids, values = [], []
    for lineno, row in enumerate(rows[1:], 2):
        if not row:
            continue
        if len(row) != len(header):
            raise FormatError(f"expected {len(header)} fields, got {len(row)}", lineno)
        job_ids.append(_parse_id(row[0], lineno))
        try:
            vals = [float(x) for x in row[1:]]
        except ValueError as exc:
            raise FormatError(str(exc), lineno) from None
        if not all(math.isfinite(x) and x >= 0 for x in vals):
            raise FormatError("values must be finite and non-negative", lineno)
        values.append(vals)
    try:
        return RelevanceMatrix(job_ids, cv_ids, np.array(values).reshape(len(job_ids), len(cv_ids)), normalized)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
