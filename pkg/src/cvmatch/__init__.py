"""Recommend CVs for job offers by section-wise TF-IDF relevance."""

__version__ = "0.1.0"

from .corpus import (
    Corpus,
    CvRecord,
    JobOffer,
    load_corpus,
    parse_cv_html,
    validate_corpus,
    write_corpus,
)
from .errors import (
    AlreadyNormalized,
    CvMatchError,
    DomainError,
    DuplicateId,
    EmptyCorpus,
    EmptyQuery,
    FormatError,
    MalformedHtml,
    MissingName,
    SchemaError,
    UnknownCv,
    UnknownJob,
)
from .matrix import (
    MatrixStats,
    RelevanceMatrix,
    build_matrix,
    export_matrix_csv,
    import_matrix_csv,
    matrix_stats,
    min_max_normalize,
    top_k_cvs_for_job,
    top_k_jobs_for_cv,
)
from .normalize import DEFAULT_STOPWORDS, load_lemma_exceptions, load_stopwords, normalize_pipeline
from .tfidf import (
    QueryTermSet,
    RelevanceRecord,
    SectionedCv,
    TermScore,
    build_query_terms,
    general_average,
    inverse_document_frequency,
    score_cv_against_job,
    score_term,
    section_cv,
    term_frequency,
)
