"""Sentence vectors from a word-vector table, with a term-frequency fallback.

Sentence embeddings are the mean of the word vectors of in-vocabulary
content tokens (stopwords and punctuation are used only when no content
token is covered).  When no vector file is available, per-document term
frequency vectors keep the clustering step functional.
"""

import numpy as np

from .corpus import Document, Sentence, normalize
from .exceptions import DimensionMismatch, ParseError


class SentenceVector:
    """A dense sentence embedding; all-zero vectors flag missing coverage."""

    __slots__ = ("values",)

    def __init__(self, values):
        self.values = np.asarray(values, dtype=float)

    @property
    def is_zero(self) -> bool:
        return not np.any(self.values)

    @property
    def dim(self) -> int:
        return self.values.shape[0]

    def __repr__(self):
        return f"SentenceVector(dim={self.dim}, is_zero={self.is_zero})"


class WordVectorTable:
    """Fixed-dimension word vectors keyed by normalized word."""

    def __init__(self, dim: int, entries: dict):
        if dim < 1:
            raise ValueError("vector dimension must be >= 1")
        self.dim = dim
        self.entries = entries

    def __contains__(self, word):
        return word in self.entries

    def __len__(self):
        return len(self.entries)

    def get(self, word):
        return self.entries.get(word)


def load_word_vectors(path) -> WordVectorTable:
    """Read a word2vec-style text file: optional ``count dim`` header, then
    ``word v1 ... v_dim`` rows.  Duplicate words keep their first occurrence.
    """
    dim = None
    entries = {}
    with open(path, encoding="utf-8") as fh:
        first = True
        for lineno, line in enumerate(fh, start=1):
            fields = line.split()
            if not fields:
                continue
            if first:
                first = False
                if len(fields) == 2 and all(f.isdigit() for f in fields):
                    continue  # header line
            if len(fields) < 2:
                raise ParseError("row has no vector components", line=lineno)
            word = normalize(fields[0])
            try:
                vector = np.array([float(f) for f in fields[1:]], dtype=float)
            except ValueError as exc:
                raise ParseError(f"bad float in vector row: {exc}", line=lineno)
            if dim is None:
                dim = vector.shape[0]
            elif vector.shape[0] != dim:
                raise DimensionMismatch(
                    f"expected {dim} components, got {vector.shape[0]}",
                    line=lineno,
                )
            entries.setdefault(word, vector)
    if dim is None:
        raise ParseError(f"no vector rows in {path}")
    return WordVectorTable(dim, entries)


def sentence_vector(sentence: Sentence, table: WordVectorTable) -> SentenceVector:
    """Mean word vector of the sentence's in-vocabulary content tokens.

    Falls back to all in-vocabulary tokens when no content token is covered,
    and to the zero vector when nothing is covered at all.
    """
    content = [
        table.get(t.normalized) for t in sentence.tokens if t.is_content
    ]
    found = [v for v in content if v is not None]
    if not found:
        everything = [table.get(t.normalized) for t in sentence.tokens]
        found = [v for v in everything if v is not None]
    if not found:
        return SentenceVector(np.zeros(table.dim))
    return SentenceVector(np.mean(found, axis=0))


def cosine_similarity(a: SentenceVector, b: SentenceVector) -> float:
    """Cosine of the angle between two vectors; 0.0 when either is all-zero."""
    if a.dim != b.dim:
        raise DimensionMismatch(f"dim {a.dim} vs {b.dim}")
    norm_a = np.linalg.norm(a.values)
    norm_b = np.linalg.norm(b.values)
    if norm_a == 0.0 or norm_b == 0.0:
        return 0.0
    # Normalizing each side separately avoids underflow in the norm product.
    return float(np.dot(a.values / norm_a, b.values / norm_b))


def tf_sentence_vectors(document: Document) -> list[SentenceVector]:
    """Per-sentence term-count vectors over the document's content vocabulary.

    The vocabulary is ordered by first occurrence, so the output is
    deterministic.
    """
    vocab = {}
    for sentence in document.sentences:
        for tok in sentence.tokens:
            if tok.is_content and tok.normalized not in vocab:
                vocab[tok.normalized] = len(vocab)
    vectors = []
    for sentence in document.sentences:
        values = np.zeros(len(vocab))
        for tok in sentence.tokens:
            if tok.is_content:
                values[vocab[tok.normalized]] += 1.0
        vectors.append(SentenceVector(values))
    return vectors


def document_vectors(document: Document, table=None) -> list[SentenceVector]:
    """Sentence vectors from *table* when given, else the TF fallback."""
    if table is not None:
        return [sentence_vector(s, table) for s in document.sentences]
    return tf_sentence_vectors(document)
