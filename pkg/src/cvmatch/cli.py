"""Command-line front end.

    cvmatch ingest       --cvs cvs.jsonl --jobs jobs.jsonl --out bundle/
    cvmatch score        --corpus bundle/ --out matrix.csv [--normalize] [--records r.jsonl]
    cvmatch rank         --matrix matrix.csv (--job J | --cv C) --top K
    cvmatch stats        --matrix matrix.csv
    cvmatch export-plot  --matrix matrix.csv --job J --out plot.svg --format svg

Data goes to stdout, diagnostics to stderr (level from ``CVMATCH_LOG``).
Exit status: 0 success, 1 internal error, 2 bad input.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import __version__
from .corpus import Corpus, CvRecord, load_corpus, load_jobs, parse_cv_html, validate_corpus, write_corpus
from .errors import CvMatchError
from .matrix import (
    RecordWriter,
    build_matrix,
    export_matrix_csv,
    import_matrix_csv,
    matrix_stats,
    min_max_normalize,
    top_k_cvs_for_job,
    top_k_jobs_for_cv,
)
from .normalize import load_lemma_exceptions, load_stopwords
from .plot import bar_chart_svg, row_csv

logger = logging.getLogger("cvmatch")

CV_FILE = "cvs.jsonl"
JOB_FILE = "jobs.jsonl"
_LEVELS = {"error": logging.ERROR, "warn": logging.WARNING, "info": logging.INFO, "debug": logging.DEBUG}


class _StderrHandler(logging.Handler):
    """Writes to whatever ``sys.stderr`` is at emit time."""

    def emit(self, record):
        try:
            sys.stderr.write(self.format(record) + "\n")
        except Exception:
            self.handleError(record)


def _setup_logging():
    level = _LEVELS.get(os.environ.get("CVMATCH_LOG", "warn").lower(), logging.WARNING)
    root = logging.getLogger("cvmatch")
    root.setLevel(level)
    if not any(isinstance(h, _StderrHandler) for h in root.handlers):
        handler = _StderrHandler()
        handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
        root.addHandler(handler)


def _text_options(args):
    stop = load_stopwords(args.stopwords) if args.stopwords else None
    lemmas = load_lemma_exceptions(args.lemmas) if args.lemmas else None
    return stop, lemmas


def cmd_ingest(args) -> int:
    if args.cv_html:
        cvs = []
        for i, path in enumerate(args.cv_html):
            rec = parse_cv_html(Path(path).read_bytes())
            cvs.append(CvRecord(i, rec.name, rec.description, rec.experience, rec.skills))
        corpus = Corpus(cvs, load_jobs(args.jobs))
    else:
        corpus = load_corpus(args.cvs, args.jobs)
    stop, lemmas = _text_options(args)
    for w in validate_corpus(corpus, stop, lemmas):
        logger.warning(w)
    if not corpus.jobs:
        logger.warning("job file is empty")
    if not corpus.cvs:
        logger.warning("cv file is empty")
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_corpus(corpus, out / CV_FILE, out / JOB_FILE)
    print(f"cvs: {len(corpus.cvs)}, jobs: {len(corpus.jobs)}")
    return 0


def cmd_score(args) -> int:
    bundle = Path(args.corpus)
    corpus = load_corpus(bundle / CV_FILE, bundle / JOB_FILE)
    stop, lemmas = _text_options(args)
    if args.records:
        with open(args.records, "w", encoding="utf-8", newline="\n") as fh:
            writer = RecordWriter(fh)
            m = build_matrix(corpus, stop, lemmas, workers=args.workers, sink=writer)
        logger.info("wrote %d relevance records to %s", writer.count, args.records)
    else:
        m = build_matrix(corpus, stop, lemmas, workers=args.workers)
    if args.normalize:
        s = matrix_stats(m)
        print("raw_min,raw_max")
        print(f"{s.min:.6f},{s.max:.6f}")
        m = min_max_normalize(m)
    export_matrix_csv(m, args.out)
    logger.info("wrote %d x %d matrix to %s", *m.shape, args.out)
    return 0


def cmd_rank(args) -> int:
    m = import_matrix_csv(args.matrix)
    if args.job is not None:
        hits = top_k_cvs_for_job(m, args.job, args.top)
    else:
        hits = top_k_jobs_for_cv(m, args.cv, args.top)
    for rank, (rid, value) in enumerate(hits, 1):
        print(f"{rank},{rid},{value:.6f}")
    return 0


def cmd_stats(args) -> int:
    s = matrix_stats(import_matrix_csv(args.matrix))
    print("min,max,mean,nonzero_fraction")
    print(f"{s.min:.6f},{s.max:.6f},{s.mean:.6f},{s.nonzero_fraction:.6f}")
    return 0


def cmd_export_plot(args) -> int:
    m = import_matrix_csv(args.matrix)
    row = m.row(args.job).tolist()
    if args.format == "csv":
        content = row_csv(m.cv_ids, row)
    else:
        content = bar_chart_svg(m.cv_ids, row, title=f"job {args.job}")
    Path(args.out).write_text(content, encoding="utf-8")
    return 0


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cvmatch", description="Rank CVs against job offers with section-wise TF-IDF.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    text = argparse.ArgumentParser(add_help=False)
    text.add_argument("--stopwords", metavar="PATH", help="stopword list, one word per line")
    text.add_argument("--lemmas", metavar="PATH", help="lemma exceptions, inflected<TAB>lemma")

    s = sub.add_parser("ingest", parents=[text], help="validate records and write a corpus bundle")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--cvs", metavar="PATH", help="CV JSONL file")
    src.add_argument("--cv-html", metavar="PATH", nargs="+", help="pre-scraped CV HTML pages")
    s.add_argument("--jobs", metavar="PATH", required=True, help="job offer JSONL file")
    s.add_argument("--out", metavar="DIR", required=True)
    s.set_defaults(func=cmd_ingest)

    s = sub.add_parser("score", parents=[text], help="build the job x CV relevance matrix")
    s.add_argument("--corpus", metavar="DIR", required=True, help="bundle written by ingest")
    s.add_argument("--out", metavar="PATH", required=True, help="matrix CSV")
    s.add_argument("--normalize", action="store_true", help="min-max scale the matrix")
    s.add_argument("--records", metavar="PATH", help="also write per-pair section ratings as JSONL")
    s.add_argument("--workers", type=_positive, default=None, help="scoring threads (default: all cores)")
    s.set_defaults(func=cmd_score)

    s = sub.add_parser("rank", help="top-k CVs for a job, or jobs for a CV")
    s.add_argument("--matrix", metavar="PATH", required=True)
    who = s.add_mutually_exclusive_group(required=True)
    who.add_argument("--job", type=int)
    who.add_argument("--cv", type=int)
    s.add_argument("--top", type=_positive, default=10)
    s.set_defaults(func=cmd_rank)

    s = sub.add_parser("stats", help="min / max / mean / nonzero fraction of a matrix")
    s.add_argument("--matrix", metavar="PATH", required=True)
    s.set_defaults(func=cmd_stats)

    s = sub.add_parser("export-plot", help="one job's row as CSV or SVG bar chart")
    s.add_argument("--matrix", metavar="PATH", required=True)
    s.add_argument("--job", type=int, required=True)
    s.add_argument("--out", metavar="PATH", required=True)
    s.add_argument("--format", choices=("csv", "svg"), default="csv")
    s.set_defaults(func=cmd_export_plot)
    return p


def main(argv=None) -> int:
    _setup_logging()
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (CvMatchError, OSError) as exc:
        logger.error("%s", exc)
        return 2
    except Exception:
        logger.exception("internal error")
        return 1


if __name__ == "__main__":
    sys.exit(main())
