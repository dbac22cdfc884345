"""Unsupervised Bengali single-document summarization.

The pipeline groups similar sentences by Ward clustering over cosine
distances (cluster count chosen by silhouette), then either fuses each
cluster through a word graph (abstractive) or keeps the most central
sentence (extractive).  Classic extractive baselines and a ROUGE
evaluation harness round out the package.
"""

from .cluster import WardSilhouetteClustering, select_clustering
from .corpus import (
    CorpusSample,
    Document,
    Sentence,
    TagLexicon,
    Token,
    load_corpus,
    load_pretagged,
    load_stopwords,
    load_tag_lexicon,
    preprocess,
)
from .embed import WordVectorTable, load_word_vectors
from .fusion import FusionConfig, fuse_cluster
from .metrics import (
    SYSTEMS,
    copy_rate,
    corpus_stats,
    evaluate_corpus,
    rouge_l,
    rouge_n,
)
from .summarizer import Summarizer, Summary, SummaryParams, summarize

__version__ = "0.1.0"

__all__ = [
    "CorpusSample",
    "Document",
    "FusionConfig",
    "Sentence",
    "Summarizer",
    "Summary",
    "SummaryParams",
    "SYSTEMS",
    "TagLexicon",
    "Token",
    "WardSilhouetteClustering",
    "WordVectorTable",
    "copy_rate",
    "corpus_stats",
    "evaluate_corpus",
    "fuse_cluster",
    "load_corpus",
    "load_pretagged",
    "load_stopwords",
    "load_tag_lexicon",
    "load_word_vectors",
    "preprocess",
    "rouge_l",
    "rouge_n",
    "select_clustering",
    "summarize",
]
