"""Shared builders for hand-constructed documents in tests."""

import numpy as np
import pytest

from bensumm.corpus import Document, Sentence, Token, is_punct_token, normalize


def oracle_pagerank(weights, damping=0.85, tol=1e-6, max_iter=100):
    """Plain-loop power iteration used as the reference implementation."""
    n = len(weights)
    scores = [1.0 / n] * n
    for _ in range(max_iter):
        updated = [(1.0 - damping) / n] * n
        for i in range(n):
            out = sum(weights[i])
            if out == 0:
                for j in range(n):
                    updated[j] += damping * scores[i] / n
            else:
                for j in range(n):
                    if weights[i][j]:
                        updated[j] += damping * scores[i] * weights[i][j] / out
        if sum(abs(u - s) for u, s in zip(updated, scores)) < tol:
            scores = updated
            break
        scores = updated
    return np.array(scores)


def make_sentence(spec, index=0, stopwords=frozenset()):
    """Build a Sentence from compact ``word/POS`` notation.

    POS defaults to NOUN; bare punctuation becomes PUNCT; membership in
    *stopwords* sets the stopword flag.  Example: ``"the/ADP cat sat/VERB ."``
    """
    tokens = []
    for item in spec.split():
        if "/" in item and not is_punct_token(item):
            surface, pos = item.rsplit("/", 1)
        else:
            surface, pos = item, None
        norm = normalize(surface)
        if pos is None:
            pos = "PUNCT" if is_punct_token(surface) else "NOUN"
        tokens.append(Token(surface, norm, pos, norm in stopwords))
    raw = " ".join(t.surface for t in tokens)
    return Sentence(index, tokens, raw)


def make_document(sentence_specs, stopwords=frozenset(), doc_id="doc"):
    sentences = [
        make_sentence(spec, index=i, stopwords=stopwords)
        for i, spec in enumerate(sentence_specs)
    ]
    return Document(doc_id, sentences)


@pytest.fixture
def sentence_factory():
    return make_sentence


@pytest.fixture
def document_factory():
    return make_document
