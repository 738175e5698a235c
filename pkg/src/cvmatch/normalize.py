"""Spanish text cleaning: from raw scraped text to a list of canonical terms.

The stages can be used one by one, or chained with :func:`normalize_pipeline`::

    >>> normalize_pipeline("Minería de Datos, aplicando Scrapy.")
    ['mineria', 'datos', 'aplicar', 'scrapy']

Terms are lowercase ASCII tokens matching ``[a-z0-9]+``. Everything here is a
pure function of its arguments, so results never depend on locale.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from importlib import resources
from pathlib import Path

from .errors import SchemaError

__all__ = [
    "CORE_STOPWORDS",
    "DEFAULT_STOPWORDS",
    "SUFFIX_RULES",
    "DEFAULT_LEMMA_EXCEPTIONS",
    "transliterate_diacritics",
    "remove_non_ascii",
    "to_lowercase",
    "remove_punctuation",
    "tokenize",
    "remove_stopwords",
    "lemmatize_verbs",
    "normalize_pipeline",
    "normalize_word",
    "load_stopwords",
    "load_lemma_exceptions",
]

_DIACRITICS = str.maketrans(
    {
        "á": "a", "é": "e", "í": "i", "ó": "o", "ú": "u", "ü": "u", "ñ": "n",
        "Á": "A", "É": "E", "Í": "I", "Ó": "O", "Ú": "U", "Ü": "U", "Ñ": "N",
    }
)
_NON_ASCII = re.compile(r"[^\x00-\x7f]")
_UPPER = str.maketrans("ABCDEFGHIJKLMNOPQRSTUVWXYZ", "abcdefghijklmnopqrstuvwxyz")
_KEEP = frozenset("abcdefghijklmnopqrstuvwxyz0123456789 ")
_PUNCT = str.maketrans({chr(i): " " for i in range(128) if chr(i) not in _KEEP})
_TERM = re.compile(r"[a-z0-9]+")

# Guaranteed members of every stopword list, including user overrides.
CORE_STOPWORDS = frozenset(
    "el la los en de y a que las un una con para por del se es".split()
)

# (suffix, replacement); matched longest suffix first.
SUFFIX_RULES: tuple[tuple[str, str], ...] = (
    ("abamos", "ar"),
    ("aremos", "ar"),
    ("eremos", "er"),
    ("iremos", "ir"),
    ("ieron", "er"),
    ("iendo", "er"),
    ("abais", "ar"),
    ("aron", "ar"),
    ("aban", "ar"),
    ("abas", "ar"),
    ("ando", "ar"),
    ("aba", "ar"),
)
_RULES_BY_LENGTH = tuple(sorted(SUFFIX_RULES, key=lambda r: -len(r[0])))
_MIN_LEMMA_LENGTH = 5
_MIN_STEM = 2

# Irregular forms and -ir verbs the suffix rules would get wrong.
DEFAULT_LEMMA_EXCEPTIONS: Mapping[str, str] = {
    "yendo": "ir",
    "leyendo": "leer",
    "oyendo": "oir",
    "trayendo": "traer",
    "construyendo": "construir",
    "incluyendo": "incluir",
    "diciendo": "decir",
    "pidiendo": "pedir",
    "sirviendo": "servir",
    "siguiendo": "seguir",
    "escribiendo": "escribir",
    "viviendo": "vivir",
    "abriendo": "abrir",
    "recibiendo": "recibir",
    "dirigiendo": "dirigir",
    "produciendo": "producir",
    "reduciendo": "reducir",
    "traduciendo": "traducir",
    "cumpliendo": "cumplir",
    "asistiendo": "asistir",
    "compartiendo": "compartir",
    "decidiendo": "decidir",
    "describiendo": "describir",
    "dividiendo": "dividir",
    "existiendo": "existir",
    "invirtiendo": "invertir",
    "permitiendo": "permitir",
    "prefiriendo": "preferir",
    "repitiendo": "repetir",
    "sintiendo": "sentir",
    "subiendo": "subir",
    "sugiriendo": "sugerir",
    "durmiendo": "dormir",
    "muriendo": "morir",
    "pudiendo": "poder",
    "viniendo": "venir",
    "consiguiendo": "conseguir",
    "convirtiendo": "convertir",
    "definiendo": "definir",
    "distribuyendo": "distribuir",
    "contribuyendo": "contribuir",
}


def transliterate_diacritics(text: str) -> str:
    """Map Spanish accented vowels, ü and ñ (both cases) to plain ASCII letters."""
    return text.translate(_DIACRITICS)


def remove_non_ascii(text: str) -> str:
    return _NON_ASCII.sub("", text)


def to_lowercase(text: str) -> str:
    # str.lower() would also touch non-ASCII letters; only ASCII is in scope.
    return text.translate(_UPPER)


def remove_punctuation(text: str) -> str:
    """Replace every ASCII character outside ``[a-z0-9 ]`` with one space.

    Replacing rather than deleting keeps ``"java/python"`` as two terms.
    Expects lowercased input; non-ASCII characters are left alone.
    """
    return text.translate(_PUNCT)


def tokenize(text: str) -> list[str]:
    return text.split()


def remove_stopwords(terms: Iterable[str], stopwords: Iterable[str] | None = None) -> list[str]:
    stop = DEFAULT_STOPWORDS if stopwords is None else stopwords
    if not isinstance(stop, (set, frozenset)):
        stop = frozenset(stop)
    return [t for t in terms if t not in stop]


def _lemma(term: str, exceptions: Mapping[str, str]) -> str:
    hit = exceptions.get(term)
    if hit is not None:
        return hit
    if len(term) < _MIN_LEMMA_LENGTH:
        return term
    for suffix, repl in _RULES_BY_LENGTH:
        if term.endswith(suffix) and len(term) - len(suffix) >= _MIN_STEM:
            return term[: -len(suffix)] + repl
    return term


def lemmatize_verbs(
    terms: Iterable[str], exceptions: Mapping[str, str] | None = None
) -> list[str]:
    """Reduce common Spanish verb inflections to an infinitive-like form.

    The exception dictionary is consulted first; otherwise the longest matching
    suffix in :data:`SUFFIX_RULES` is rewritten (``aplicando`` -> ``aplicar``).
    Terms shorter than five characters are returned unchanged. Every rule
    output ends in ``ar``/``er``/``ir``, which no rule matches, so lemmas are
    fixed points.
    """
    exc = DEFAULT_LEMMA_EXCEPTIONS if exceptions is None else exceptions
    return [_lemma(t, exc) for t in terms]


def normalize_pipeline(
    text: str,
    stopwords: Iterable[str] | None = None,
    lemmas: Mapping[str, str] | None = None,
) -> list[str]:
    """Run the full cleaning chain over raw text and return its terms.

    Order: transliterate, drop non-ASCII, lowercase, punctuation to spaces,
    split, drop stopwords, lemmatize. Lemmas that land on a stopword
    (``estando`` style forms missing from a custom list) are dropped as well,
    so the output never contains a stopword.
    """
    stop = DEFAULT_STOPWORDS if stopwords is None else frozenset(stopwords)
    text = transliterate_diacritics(text)
    text = remove_non_ascii(text)
    text = to_lowercase(text)
    text = remove_punctuation(text)
    terms = remove_stopwords(tokenize(text), stop)
    return remove_stopwords(lemmatize_verbs(terms, lemmas), stop)


def normalize_word(word: str) -> str:
    """Character-level cleanup for dictionary entries (no splitting)."""
    return to_lowercase(remove_non_ascii(transliterate_diacritics(word))).strip()


def _read_lines(lines: Iterable[str]) -> Iterable[str]:
    for line in lines:
        line = line.strip()
        if line and not line.startswith("#"):
            yield line


def load_stopwords(path: str | Path | None = None) -> frozenset[str]:
    """Load a stopword list, one word per line, UTF-8.

    Without a path the embedded list is returned. Entries from a file go
    through the same transliteration as text, and :data:`CORE_STOPWORDS` are
    always included.
    """
    if path is None:
        raw = resources.files("cvmatch.data").joinpath("stopwords_es.txt").read_text("utf-8")
        lines = raw.splitlines()
    else:
        lines = Path(path).read_text("utf-8").splitlines()
    words = {normalize_word(w) for w in _read_lines(lines)}
    words.discard("")
    return frozenset(words) | CORE_STOPWORDS


def load_lemma_exceptions(
    path: str | Path, base: Mapping[str, str] | None = DEFAULT_LEMMA_EXCEPTIONS
) -> dict[str, str]:
    """Read ``inflected<TAB>lemma`` lines, layered over *base*.

    Pass ``base=None`` to use only the file's entries.
    """
    table = dict(base or {})
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise SchemaError("expected 'inflected<TAB>lemma'", lineno, path)
            inflected, lemma = (normalize_word(p) for p in parts)
            if not _TERM.fullmatch(inflected) or not _TERM.fullmatch(lemma):
                raise SchemaError("entries must be single words", lineno, path)
            table[inflected] = lemma
    return table


DEFAULT_STOPWORDS: frozenset[str] = load_stopwords()
