"""ROUGE scoring, copy rate, corpus statistics and the benchmark harness.

ROUGE is computed on normalized tokens with punctuation excluded; the
summary is treated as one token sequence for the LCS variant.  Per-sample
F1 scores are macro-averaged over the corpus.
"""

import json
from collections import Counter
from dataclasses import dataclass

from .baselines import greedykl, lexrank, random_baseline, select_top, sumbasic, textrank
from .corpus import Document
from .exceptions import EmptyCorpus, UnknownSystem
from .summarizer import SummaryParams, summarize

SYSTEMS = (
    "bensumm-abs", "bensumm-ext", "textrank", "lexrank",
    "sumbasic", "greedykl", "random",
)


@dataclass(frozen=True)
class RougeScore:
    precision: float
    recall: float
    f1: float


@dataclass
class EvalReport:
    """Mean ROUGE F1 scores of one system over a corpus."""

    system: str
    rouge1: float
    rouge2: float
    rougeL: float
    sample_count: int


@dataclass
class CorpusStats:
    sample_count: int
    mean_document_tokens: float
    mean_reference_tokens: float
    mean_copy_rate: float


def _f1(precision, recall) -> float:
    if precision + recall == 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


def _ngrams(tokens, n) -> Counter:
    return Counter(
        tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1)
    )


def rouge_n(candidate, reference, n) -> RougeScore:
    """Clipped n-gram overlap between candidate and reference token sequences."""
    cand = _ngrams(list(candidate), n)
    ref = _ngrams(list(reference), n)
    matches = sum(min(count, ref[gram]) for gram, count in cand.items())
    cand_total = sum(cand.values())
    ref_total = sum(ref.values())
    precision = matches / cand_total if cand_total else 0.0
    recall = matches / ref_total if ref_total else 0.0
    return RougeScore(precision, recall, _f1(precision, recall))


def _lcs_length(a, b) -> int:
    # One-row dynamic program.
    if len(a) < len(b):
        a, b = b, a
    row = [0] * (len(b) + 1)
    for x in a:
        prev = 0
        for j, y in enumerate(b, start=1):
            current = row[j]
            row[j] = prev + 1 if x == y else max(row[j], row[j - 1])
            prev = current
    return row[len(b)]


def rouge_l(candidate, reference) -> RougeScore:
    """Longest-common-subsequence overlap over the full token sequences."""
    cand = list(candidate)
    ref = list(reference)
    if not cand or not ref:
        return RougeScore(0.0, 0.0, 0.0)
    lcs = _lcs_length(cand, ref)
    precision = lcs / len(cand)
    recall = lcs / len(ref)
    return RougeScore(precision, recall, _f1(precision, recall))


def scoring_tokens(document: Document) -> list[str]:
    """Normalized non-punctuation tokens of the whole document, in order."""
    return [t.normalized for t in document.tokens() if not t.is_punct]


def copy_rate(document: Document, summary: Document) -> float:
    """Fraction of summary content tokens that occur anywhere in the document."""
    source = {t.normalized for t in document.tokens()}
    summary_tokens = [t.normalized for t in summary.tokens() if not t.is_punct]
    if not summary_tokens:
        return 0.0
    copied = sum(1 for w in summary_tokens if w in source)
    return copied / len(summary_tokens)


def corpus_stats(corpus) -> CorpusStats:
    """Sample count, mean token lengths and mean copy rate of a corpus."""
    if not corpus:
        raise EmptyCorpus("no samples to compute statistics over")
    n = len(corpus)
    doc_tokens = sum(len(s.document.tokens()) for s in corpus) / n
    ref_tokens = sum(len(s.reference_summary.tokens()) for s in corpus) / n
    rate = sum(copy_rate(s.document, s.reference_summary) for s in corpus) / n
    return CorpusStats(n, doc_tokens, ref_tokens, rate)


def _baseline_summary(document, ranked, budget):
    indices = select_top(ranked, budget)
    return [document.sentences[i] for i in indices]


def system_summary(sample_document, system, params: SummaryParams, seed=0):
    """The sentences the named system emits for one document."""
    if system == "bensumm-abs":
        return summarize(
            sample_document,
            SummaryParams("abstractive", params.budget, params.fusion, params.vectors),
        ).sentences
    if system == "bensumm-ext":
        return summarize(
            sample_document,
            SummaryParams("extractive", params.budget, params.fusion, params.vectors),
        ).sentences
    if system == "textrank":
        ranked = textrank(sample_document)
    elif system == "lexrank":
        ranked = lexrank(sample_document)
    elif system == "sumbasic":
        ranked = sumbasic(sample_document, params.budget)
    elif system == "greedykl":
        ranked = greedykl(sample_document, params.budget)
    elif system == "random":
        ranked = random_baseline(sample_document, seed)
    else:
        raise UnknownSystem(f"unknown system {system!r} (choose from {SYSTEMS})")
    return _baseline_summary(sample_document, ranked, params.budget)


def evaluate_corpus(corpus, system, params=None, seed=0) -> EvalReport:
    """Mean ROUGE-1/2/L F1 of *system* over *corpus* (budget sentences each).

    Every sample sees the same *seed*, so the report is a permutation-
    invariant, deterministic function of (corpus, system, params, seed).
    """
    params = params or SummaryParams()
    if system not in SYSTEMS:
        raise UnknownSystem(f"unknown system {system!r} (choose from {SYSTEMS})")
    if not corpus:
        raise EmptyCorpus("no samples to evaluate")
    totals = [0.0, 0.0, 0.0]
    for sample in corpus:
        sentences = system_summary(sample.document, system, params, seed)
        candidate = [
            t.normalized for s in sentences for t in s.tokens if not t.is_punct
        ]
        reference = scoring_tokens(sample.reference_summary)
        totals[0] += rouge_n(candidate, reference, 1).f1
        totals[1] += rouge_n(candidate, reference, 2).f1
        totals[2] += rouge_l(candidate, reference).f1
    n = len(corpus)
    return EvalReport(system, totals[0] / n, totals[1] / n, totals[2] / n, n)


def format_report_table(reports) -> str:
    """Aligned plain-text table of mean ROUGE F1 scores (in percent)."""
    width = max(len("system"), *(len(r.system) for r in reports))
    lines = [f"{'system':<{width}}  {'R-1':>6}  {'R-2':>6}  {'R-L':>6}"]
    for r in reports:
        lines.append(
            f"{r.system:<{width}}  {100 * r.rouge1:6.2f}  "
            f"{100 * r.rouge2:6.2f}  {100 * r.rougeL:6.2f}"
        )
    return "\n".join(lines)


def report_records(reports) -> str:
    """One JSON record per system row, mirroring the table columns."""
    lines = []
    for r in reports:
        lines.append(json.dumps({
            "system": r.system,
            "rouge1": r.rouge1,
            "rouge2": r.rouge2,
            "rougeL": r.rougeL,
            "samples": r.sample_count,
        }, ensure_ascii=False))
    return "\n".join(lines) + "\n"
