"""End-to-end pipeline: cluster sentences, then fuse or select one per cluster.

Abstractive mode fuses each multi-sentence cluster through the word
graph; extractive mode picks the sentence closest to the cluster
centroid.  Clusters appear in the summary in document order; when there
are more clusters than the sentence budget, the largest (then earliest)
clusters win.
"""

from dataclasses import dataclass, field

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from .cluster import select_clustering
from .corpus import Document, Sentence, TagLexicon, preprocess
from .embed import SentenceVector, cosine_similarity, document_vectors
from .exceptions import EmptyDocument
from .fusion import FusionConfig, fuse_cluster_detailed

MODES = ("abstractive", "extractive")


@dataclass
class SummaryParams:
    """Configuration for a summarization run."""

    mode: str = "abstractive"
    budget: int = 3
    fusion: FusionConfig = field(default_factory=FusionConfig)
    vectors: object = None  # WordVectorTable, or None for the TF fallback

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.budget < 1:
            raise ValueError("budget must be >= 1")


@dataclass(frozen=True)
class SentenceProvenance:
    cluster_id: int
    mode: str


@dataclass
class Summary:
    """Ordered output sentences with per-sentence provenance."""

    sentences: list[Sentence]
    provenance: list[SentenceProvenance]

    def text(self) -> str:
        return "\n".join(s.raw for s in self.sentences)


def select_representative(cluster, vectors) -> Sentence:
    """The cluster sentence most similar to the cluster's mean vector.

    *vectors* is aligned with *cluster*; ties go to the earlier sentence.
    """
    values = np.array([v.values for v in vectors])
    centroid = SentenceVector(values.mean(axis=0))
    best = None
    for sentence, vector in zip(cluster, vectors):
        similarity = cosine_similarity(vector, centroid)
        if best is None or similarity > best[0]:
            best = (similarity, sentence)
    return best[1]


def summarize(document: Document, params=None, collect_graphs=None) -> Summary:
    """Summarize *document* according to *params*.

    When *collect_graphs* is a list, every word graph built for a fused
    multi-sentence cluster is appended to it as (cluster label, graph).
    """
    params = params or SummaryParams()
    if not document.sentences:
        raise EmptyDocument(f"document {document.id!r} has no sentences")

    vectors = document_vectors(document, params.vectors)
    clustering = select_clustering(vectors)
    clusters = [
        (label, members)
        for label, members in enumerate(clustering.members())
        if members
    ]
    if len(clusters) > params.budget:
        pruned = sorted(clusters, key=lambda c: (-len(c[1]), min(c[1])))
        clusters = pruned[: params.budget]
    clusters.sort(key=lambda c: min(c[1]))

    sentences = []
    provenance = []
    for label, members in clusters:
        group = [document.sentences[i] for i in members]
        if params.mode == "abstractive":
            sentence, graph = fuse_cluster_detailed(group, params.fusion)
            if collect_graphs is not None and graph is not None:
                collect_graphs.append((label, graph))
        else:
            sentence = select_representative(group, [vectors[i] for i in members])
        sentences.append(sentence)
        provenance.append(SentenceProvenance(label, params.mode))
    return Summary(sentences, provenance)


class Summarizer(BaseEstimator, TransformerMixin):
    """Scikit-learn style front end over :func:`summarize`.

    ``transform`` maps an iterable of raw strings (or preprocessed
    :class:`Document` objects) to summary strings, one per input, so the
    summarizer drops into sklearn pipelines.  Hyperparameters mirror
    :class:`SummaryParams` and the fusion knobs; ``lexicon``, ``stopwords``
    and ``word_vectors`` carry the language resources used on raw text.

    >>> Summarizer(budget=1).fit_transform(["One sentence only."])
    ['One sentence only.']
    """

    def __init__(self, mode="abstractive", budget=3, max_paths=50,
                 min_length=8, require_verb=True, word_vectors=None,
                 lexicon=None, stopwords=None):
        self.mode = mode
        self.budget = budget
        self.max_paths = max_paths
        self.min_length = min_length
        self.require_verb = require_verb
        self.word_vectors = word_vectors
        self.lexicon = lexicon
        self.stopwords = stopwords

    def _params(self) -> SummaryParams:
        fusion = FusionConfig(self.max_paths, self.min_length, self.require_verb)
        return SummaryParams(self.mode, self.budget, fusion, self.word_vectors)

    def fit(self, X=None, y=None):
        """Validate parameters; the model itself is unsupervised and stateless."""
        self._params()
        return self

    def summarize_document(self, document) -> Summary:
        if not isinstance(document, Document):
            document = preprocess(
                document,
                self.lexicon or TagLexicon(),
                self.stopwords or frozenset(),
            )
        return summarize(document, self._params())

    def transform(self, X) -> list[str]:
        self._params()
        return [self.summarize_document(item).text() for item in X]
