"""Corpus data model and ingestion of pre-scraped CV / job offer records.

Records arrive as JSONL (one object per line) or, for CVs, as HTML pages whose
elements carry the class markers ``cv-name``, ``cv-description``,
``cv-experience`` and ``cv-skills``.
"""

from __future__ import annotations

import json
import logging
from collections.abc import Iterable, Mapping
from dataclasses import asdict, dataclass, field
from html.parser import HTMLParser
from pathlib import Path

from .errors import DuplicateId, MalformedHtml, MissingName, SchemaError
from .normalize import normalize_pipeline

logger = logging.getLogger(__name__)

CV_SECTIONS = ("description", "experience", "skills")
JOB_TEXT_FIELDS = ("city", "company", "description", "requirements", "functions", "knowledge")


@dataclass(frozen=True)
class CvRecord:
    """One candidate. ``description``, ``experience`` and ``skills`` are the
    three scored sections, in that order. ``id`` is None until assigned."""

    id: int | None
    name: str
    description: str = ""
    experience: str = ""
    skills: str = ""

    @property
    def sections(self) -> tuple[str, str, str]:
        return (self.description, self.experience, self.skills)


@dataclass(frozen=True)
class JobOffer:
    id: int
    title: str
    city: str = ""
    company: str = ""
    description: str = ""
    requirements: str = ""
    functions: str = ""
    knowledge: str = ""

    def __post_init__(self):
        if not self.title:
            raise ValueError("job title must be non-empty")


def _check_ids(records, kind):
    ids = [r.id for r in records]
    for rid in ids:
        if not isinstance(rid, int) or isinstance(rid, bool) or rid < 0:
            raise ValueError(f"{kind} id must be a non-negative integer, got {rid!r}")
    if any(a >= b for a, b in zip(ids, ids[1:])):
        raise ValueError(f"{kind} ids must be unique and ascending")


@dataclass(frozen=True)
class Corpus:
    """Immutable collection of CVs and job offers, each sorted by id."""

    cvs: tuple[CvRecord, ...] = field(default_factory=tuple)
    jobs: tuple[JobOffer, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "cvs", tuple(self.cvs))
        object.__setattr__(self, "jobs", tuple(self.jobs))
        _check_ids(self.cvs, "cv")
        _check_ids(self.jobs, "job")


# --------------------------------------------------------------------------
# HTML


_MARKERS = {
    "cv-name": "name",
    "cv-description": "description",
    "cv-experience": "experience",
    "cv-skills": "skills",
}
_VOID = frozenset(
    "area base br col embed hr img input link meta param source track wbr".split()
)


class _CvHtmlParser(HTMLParser):
    def __init__(self):
        super().__init__(convert_charrefs=True)
        # stack entries: (tag, markers on that element, text buffer or None)
        self._stack: list[tuple[str, tuple[str, ...], list[str] | None]] = []
        self.found: dict[str, list[str]] = {k: [] for k in _MARKERS.values()}

    def handle_starttag(self, tag, attrs):
        if tag in _VOID:
            return
        classes = []
        for key, value in attrs:
            if key == "class" and value:
                classes.extend(value.split())
        markers = tuple(dict.fromkeys(_MARKERS[c] for c in classes if c in _MARKERS))
        self._stack.append((tag, markers, [] if markers else None))

    def handle_startendtag(self, tag, attrs):
        pass

    def handle_endtag(self, tag):
        for depth in range(len(self._stack) - 1, -1, -1):
            if self._stack[depth][0] == tag:
                while len(self._stack) > depth:
                    self._pop()
                return
        # stray end tag: ignore, as browsers do

    def handle_data(self, data):
        for _, _, buf in self._stack:
            if buf is not None:
                buf.append(data)

    def _pop(self):
        _, markers, buf = self._stack.pop()
        if buf is None:
            return
        text = " ".join("".join(buf).split())
        if not text:
            return
        for m in markers:
            self.found[m].append(text)

    def close(self):
        super().close()
        while self._stack:
            self._pop()


def parse_cv_html(html: str | bytes) -> CvRecord:
    """Extract one CV from a pre-scraped HTML page.

    Each field is the text of all elements carrying the matching class marker,
    in document order, joined with a single space. Whitespace inside an
    element is collapsed. Sections without a marker come back empty; a page
    without ``cv-name`` raises :class:`MissingName`. The returned record has
    ``id=None``.
    """
    if isinstance(html, bytes):
        try:
            html = html.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedHtml(f"not valid UTF-8: {exc}") from exc
    if not isinstance(html, str):
        raise MalformedHtml(f"expected str or bytes, got {type(html).__name__}")
    parser = _CvHtmlParser()
    try:
        parser.feed(html)
        parser.close()
    except Exception as exc:  # html.parser signals breakage with assorted types
        raise MalformedHtml(str(exc)) from exc
    fields = {k: " ".join(v) for k, v in parser.found.items()}
    if not parser.found["name"]:
        raise MissingName("no element with class 'cv-name'")
    return CvRecord(id=None, **fields)


# --------------------------------------------------------------------------
# JSONL


def _string(obj, key, line, path, required):
    if key not in obj:
        if required:
            raise SchemaError(f"missing field {key!r}", line, path)
        return ""
    value = obj[key]
    if not isinstance(value, str):
        raise SchemaError(f"field {key!r} must be a string", line, path)
    return value


def _read_jsonl(path: Path) -> Iterable[tuple[int, dict]]:
    """Yield (0-based line index, object) for every non-blank line."""
    with open(path, encoding="utf-8") as fh:
        for index, line in enumerate(fh):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise SchemaError(f"invalid JSON: {exc.msg}", index + 1, path) from exc
            if not isinstance(obj, dict):
                raise SchemaError("record must be a JSON object", index + 1, path)
            yield index, obj


def _record_id(obj, index, path):
    if "id" not in obj or obj["id"] is None:
        return index
    rid = obj["id"]
    if not isinstance(rid, int) or isinstance(rid, bool) or rid < 0:
        raise SchemaError("'id' must be a non-negative integer", index + 1, path)
    return rid


def _collect(path, build):
    path = Path(path)
    records, seen = [], {}
    for index, obj in _read_jsonl(path):
        rid = _record_id(obj, index, path)
        if rid in seen:
            raise DuplicateId(rid, index + 1, path)
        seen[rid] = index
        records.append(build(obj, rid, index + 1, path))
    if any(a.id >= b.id for a, b in zip(records, records[1:])):
        logger.info("%s: ids not in file order, sorting by id", path)
        records.sort(key=lambda r: r.id)
    return records


def _build_cv(obj, rid, line, path):
    name = _string(obj, "name", line, path, required=True)
    sections = {k: _string(obj, k, line, path, required=True) for k in CV_SECTIONS}
    return CvRecord(id=rid, name=name, **sections)


def _build_job(obj, rid, line, path):
    title = _string(obj, "title", line, path, required=True)
    if not title.strip():
        raise SchemaError("'title' must be non-empty", line, path)
    rest = {k: _string(obj, k, line, path, required=False) for k in JOB_TEXT_FIELDS}
    return JobOffer(id=rid, title=title, **rest)


def load_cvs(path) -> list[CvRecord]:
    return _collect(path, _build_cv)


def load_jobs(path) -> list[JobOffer]:
    return _collect(path, _build_job)


def load_corpus(cv_path, job_path) -> Corpus:
    """Load CVs and job offers from two JSONL files.

    A record without ``"id"`` gets its 0-based line index. Raises
    :class:`SchemaError` (with the 1-based line) on bad records,
    :class:`DuplicateId` on repeated ids, and ``OSError`` if a file is
    unreadable.
    """
    return Corpus(cvs=load_cvs(cv_path), jobs=load_jobs(job_path))


def _dump(records, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for rec in records:
            fh.write(json.dumps(asdict(rec), ensure_ascii=False))
            fh.write("\n")


def write_corpus(corpus: Corpus, cv_path, job_path) -> None:
    """Write a corpus as two JSONL files that :func:`load_corpus` reads back
    to an equal Corpus. Ids are always written explicitly."""
    if any(c.id is None for c in corpus.cvs):
        raise ValueError("cannot export CVs without ids")
    _dump(corpus.cvs, cv_path)
    _dump(corpus.jobs, job_path)


def job_query_text(job: JobOffer) -> str:
    """Fields merged into a job's query: title, description, requirements,
    functions, knowledge. City and company are not part of the query."""
    return " ".join(
        (job.title, job.description, job.requirements, job.functions, job.knowledge)
    )


def validate_corpus(
    corpus: Corpus,
    stopwords: Iterable[str] | None = None,
    lemmas: Mapping[str, str] | None = None,
) -> list[str]:
    """Return human-readable warnings about records that will score zero."""
    warnings = []
    for cv in corpus.cvs:
        if not any(s.strip() for s in cv.sections):
            warnings.append(f"cv {cv.id}: all three sections are empty")
    for job in corpus.jobs:
        if not normalize_pipeline(job_query_text(job), stopwords, lemmas):
            warnings.append(f"job {job.id}: text normalizes to zero terms")
    return warnings
