"""
From a scraped CV page to a bar chart
=====================================

CV pages are read from HTML with class markers (``cv-name``,
``cv-description``, ``cv-experience``, ``cv-skills``). After scoring, one job's
row can be exported as CSV data or a static SVG bar chart.
"""

import tempfile
from pathlib import Path

from cvmatch import Corpus, CvRecord, build_matrix, export_matrix_csv, load_corpus, parse_cv_html
from cvmatch.plot import bar_chart_svg, row_csv

data = Path(__file__).parent / "data"
rec = parse_cv_html((data / "cv_rosa.html").read_bytes())
print(rec)

# %%
# Give the parsed page an id and add it to the corpus next to the JSONL CVs.
base = load_corpus(data / "cvs.jsonl", data / "jobs.jsonl")
page_cv = CvRecord(len(base.cvs), rec.name, rec.description, rec.experience, rec.skills)
corpus = Corpus(base.cvs + (page_cv,), base.jobs)
m = build_matrix(corpus)

# %%
# The parsed page and the JSONL record for the same person score closely;
# the page lists slightly different skills.
print(m.column(2), m.column(page_cv.id))

# %%
out = Path(tempfile.mkdtemp())
export_matrix_csv(m, out / "matrix.csv")
(out / "job1.csv").write_text(row_csv(m.cv_ids, m.row(1)))
(out / "job1.svg").write_text(bar_chart_svg(m.cv_ids, m.row(1), title="Desarrollador Java"))
print((out / "job1.csv").read_text())
print("wrote", sorted(p.name for p in out.iterdir()), "to", out)
