"""
Job x CV relevance matrix and recommendations
=============================================

Load a small corpus, score every CV against every job offer, rescale the
matrix to [0, 1] and ask for the best candidates.
"""

from pathlib import Path

import numpy as np

from cvmatch import (
    build_matrix,
    load_corpus,
    matrix_stats,
    min_max_normalize,
    top_k_cvs_for_job,
    top_k_jobs_for_cv,
    validate_corpus,
)

data = Path(__file__).parent / "data"
corpus = load_corpus(data / "cvs.jsonl", data / "jobs.jsonl")
print(len(corpus.cvs), "CVs,", len(corpus.jobs), "jobs")
print("warnings:", validate_corpus(corpus))

# %%
# Rows are jobs, columns are CVs. The sink receives the per-section ratings
# behind every cell.
records = []
m = build_matrix(corpus, sink=records.append)
np.set_printoptions(precision=4, suppress=True)
print(m.values)
print(records[0])

# %%
# Global min-max scaling keeps every ranking intact.
print(matrix_stats(m))
scaled = min_max_normalize(m)
print(scaled.values)

# %%
for job in corpus.jobs:
    best = top_k_cvs_for_job(scaled, job.id, 2)
    names = [(corpus.cvs[c].name, round(v, 3)) for c, v in best]
    print(f"{job.title:<30} -> {names}")

# %%
# And the other way round: which offers suit a given candidate.
print(top_k_jobs_for_cv(m, 2, 3))
