"""
Scoring the terms of one job offer against one CV
=================================================

A CV is split into description, experience and skills. Those three texts are
the whole document collection for that CV, so the idf of a term is
``ln(3 / number of sections containing it)``.

This walks through a CV whose description has 21 terms, with experience and
skills of 5 terms each.
"""

from cvmatch import CvRecord, JobOffer, build_query_terms, score_cv_against_job, score_term, section_cv

cv = CvRecord(
    0,
    "Ana",
    description=(
        "Minería minería Scrapy aplicando sistema Sistema recomendación recomendación "
        "python java analisis estadistica redes neuronales proyectos universidad "
        "ingenieria software web clientes reportes"
    ),
    experience="minería, sistema de recomendación; gestion equipos",
    skills="Scrapy excel powerbi linux git",
)
job = JobOffer(0, "Minería Scrapy", description="aplicando sistema de recomendación")

scv = section_cv(cv)
query = build_query_terms(job)
print("section lengths:", scv.section_lengths)
print("query terms:", query.terms)

# %%
# Per-term tf, df, idf and tf-idf for each section.
print(f"{'term':<15}{'tf':>24}{'idf':>9}{'tf-idf':>26}")
for term in query:
    ts = score_term(term, scv)
    tf = ", ".join(str(x) for x in ts.tf)
    tfidf = ", ".join(f"{x:.3f}" for x in ts.tf_idf)
    print(f"{term:<15}{tf:>24}{ts.idf:>9.4f}{tfidf:>26}")

# %%
# Section ratings average over *all* query terms, including those a section
# lacks. The general average is the mean of the three.
rec = score_cv_against_job(query, scv)
print("ratings:", [round(r, 4) for r in rec.ratings])
print("general average:", round(rec.general_average, 4))
