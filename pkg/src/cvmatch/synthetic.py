"""Random Spanish-looking corpora for benchmarks and demos."""

from __future__ import annotations

import numpy as np

from .corpus import Corpus, CvRecord, JobOffer
from .normalize import DEFAULT_STOPWORDS, lemmatize_verbs

_SYLLABLES = (
    "ca co cu da de di do fa fe fi fo ga go la le li lo lu ma me mi mo mu "
    "na ne ni no pa pe pi po ra re ri ro sa si so ta te ti to va ve vi"
).split()


def make_vocabulary(size: int, seed: int = 0) -> list[str]:
    """``size`` distinct pseudo-words that survive normalization unchanged."""
    rng = np.random.default_rng(seed)
    words: dict[str, None] = {}
    while len(words) < size:
        n = int(rng.integers(2, 5))
        w = "".join(rng.choice(_SYLLABLES, size=n))
        if w in DEFAULT_STOPWORDS or lemmatize_verbs([w])[0] != w:
            continue
        words[w] = None
    return list(words)


def make_synthetic_corpus(
    n_jobs: int,
    n_cvs: int,
    section_tokens: int = 50,
    vocab_size: int = 3000,
    seed: int = 0,
) -> Corpus:
    """Jobs and CVs drawn from a Zipf-like distribution over one vocabulary."""
    rng = np.random.default_rng(seed)
    vocab = np.array(make_vocabulary(vocab_size, seed))
    p = 1.0 / np.arange(1, vocab_size + 1)
    p /= p.sum()

    def text(n):
        return " ".join(rng.choice(vocab, size=n, p=p))

    cvs = [
        CvRecord(i, f"candidato {i}", text(section_tokens), text(section_tokens), text(section_tokens))
        for i in range(n_cvs)
    ]
    jobs = [
        JobOffer(
            i, text(3), city="lima", company=f"empresa {i}",
            description=text(section_tokens // 2), requirements=text(section_tokens // 4),
            functions=text(section_tokens // 4), knowledge=text(section_tokens // 5),
        )
        for i in range(n_jobs)
    ]
    return Corpus(cvs, jobs)
