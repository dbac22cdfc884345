"""Classic extractive baselines: TextRank, LexRank, SumBasic, GreedyKL, random.

Each baseline ranks every sentence of a document (a full permutation of
the indices with a finite salience score per sentence); the caller takes
the top-``budget`` sentences and re-sorts them into document order.
"""

import math
import random
from collections import Counter

import numpy as np

from .corpus import Document
from .embed import SentenceVector, cosine_similarity
from .pagerank import pagerank

# RankedSentences: list of (sentence index, salience score), descending score.


def select_top(ranked, budget) -> list[int]:
    """Indices of the top-*budget* ranked sentences, in document order."""
    return sorted(index for index, _ in ranked[:budget])


def _content_counts(sentence) -> Counter:
    return Counter(t.normalized for t in sentence.tokens if t.is_content)


def _rank_by_score(scores) -> list:
    order = sorted(range(len(scores)), key=lambda i: (-scores[i], i))
    return [(i, float(scores[i])) for i in order]


def textrank(document: Document):
    """Sentence PageRank over content-word overlap similarity.

    similarity(i, j) = |shared content words| / (log len_i + log len_j),
    0 when either log term is 0.
    """
    n = len(document.sentences)
    words = [set(_content_counts(s)) for s in document.sentences]
    lengths = [math.log(len(s.tokens)) if len(s.tokens) > 0 else 0.0
               for s in document.sentences]
    weights = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            if lengths[i] == 0.0 or lengths[j] == 0.0:
                continue
            overlap = len(words[i] & words[j])
            if overlap:
                weights[i, j] = weights[j, i] = overlap / (lengths[i] + lengths[j])
    return _rank_by_score(pagerank(weights))


def lexrank(document: Document):
    """Thresholded TF-IDF cosine sentence graph, degree normalized.

    IDF is computed over the document's own sentences; edges with cosine
    similarity above 0.1 form an unweighted graph fed to PageRank.
    """
    n = len(document.sentences)
    counts = [_content_counts(s) for s in document.sentences]
    df = Counter()
    for c in counts:
        df.update(set(c))
    vocab = {w: k for k, w in enumerate(df)}
    idf = {w: math.log(n / df[w]) for w in df}

    vectors = []
    for c in counts:
        values = np.zeros(len(vocab))
        for w, tf in c.items():
            values[vocab[w]] = tf * idf[w]
        vectors.append(SentenceVector(values))

    adjacency = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            if cosine_similarity(vectors[i], vectors[j]) > 0.1:
                adjacency[i, j] = adjacency[j, i] = 1.0
    return _rank_by_score(pagerank(adjacency))


def sumbasic(document: Document, budget=3):
    """Iterative word-probability picking with squared down-weighting.

    Sentences score the mean document-level probability of their content
    tokens; after a pick, the probabilities of its words are squared.
    The full pick order is returned (*budget* consumers slice it).
    """
    probs = _word_probabilities(document)
    remaining = list(range(len(document.sentences)))
    ranked = []
    while remaining:
        best = None
        for i in remaining:
            tokens = [t.normalized for t in document.sentences[i].tokens if t.is_content]
            score = sum(probs[w] for w in tokens) / len(tokens) if tokens else 0.0
            if best is None or score > best[1]:
                best = (i, score)
        index, score = best
        ranked.append((index, score))
        remaining.remove(index)
        for w in set(t.normalized for t in document.sentences[index].tokens if t.is_content):
            probs[w] = probs[w] ** 2
    return ranked


def _word_probabilities(document) -> dict:
    counts = Counter()
    for sentence in document.sentences:
        counts.update(t.normalized for t in sentence.tokens if t.is_content)
    total = sum(counts.values())
    return {w: c / total for w, c in counts.items()} if total else {}


def greedykl(document: Document, budget=3):
    """Greedy selection minimizing KL(document || summary) over content unigrams.

    The summary distribution is add-1 smoothed over the document
    vocabulary.  Scores are rank-derived (1 - position/n) since KL values
    do not decrease monotonically.
    """
    doc_counts = Counter()
    for sentence in document.sentences:
        doc_counts.update(t.normalized for t in sentence.tokens if t.is_content)
    total = sum(doc_counts.values())
    vocab = list(doc_counts)
    p_doc = {w: c / total for w, c in doc_counts.items()} if total else {}

    def kl_with(summary_counts, summary_total):
        divergence = 0.0
        for w in vocab:
            q = (summary_counts[w] + 1) / (summary_total + len(vocab))
            divergence += p_doc[w] * math.log(p_doc[w] / q)
        return divergence

    n = len(document.sentences)
    remaining = list(range(n))
    summary_counts = Counter()
    summary_total = 0
    ranked = []
    while remaining:
        best = None
        for i in remaining:
            candidate = summary_counts.copy()
            tokens = [t.normalized for t in document.sentences[i].tokens if t.is_content]
            candidate.update(tokens)
            divergence = kl_with(candidate, summary_total + len(tokens)) if vocab else 0.0
            if best is None or divergence < best[1]:
                best = (i, divergence)
        index, _ = best
        tokens = [t.normalized for t in document.sentences[index].tokens if t.is_content]
        summary_counts.update(tokens)
        summary_total += len(tokens)
        remaining.remove(index)
        ranked.append((index, 1.0 - len(ranked) / n))
    return ranked


def random_baseline(document: Document, seed=0):
    """Uniformly shuffled sentence order, deterministic per seed."""
    n = len(document.sentences)
    order = list(range(n))
    random.Random(seed).shuffle(order)
    return [(index, 1.0 - position / n) for position, index in enumerate(order)]
