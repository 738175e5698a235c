"""
Cleaning Spanish text into terms
================================

Every piece of text, CV section or job field, goes through the same chain
before it is scored. Here we follow one sentence through each stage.
"""

from cvmatch import normalize as nz

raw = "Minería de Datos, aplicando Scrapy (y Python/SQL) desde el AÑO 2019."

# %%
# Accents and ñ are mapped to plain letters first, so "Minería" and
# "mineria" end up as the same term. Anything else outside ASCII is dropped.
step = nz.transliterate_diacritics(raw)
print(step)
step = nz.remove_non_ascii(step)
step = nz.to_lowercase(step)
print(step)

# %%
# Punctuation becomes a space: "python/sql" gives two terms, not "pythonsql".
step = nz.remove_punctuation(step)
tokens = nz.tokenize(step)
print(tokens)

# %%
# Function words go away, then verb forms are reduced ("aplicando" -> "aplicar").
tokens = nz.remove_stopwords(tokens)
print(tokens)
print(nz.lemmatize_verbs(tokens))

# %%
# The whole chain in one call:
print(nz.normalize_pipeline(raw))

# %%
# A custom stopword list or extra lemma exceptions can be passed in; here the
# year is treated as noise.
print(nz.normalize_pipeline(raw, stopwords=nz.DEFAULT_STOPWORDS | {"2019"}))
print(nz.lemmatize_verbs(["hicieramos"], {"hicieramos": "hacer"}))
