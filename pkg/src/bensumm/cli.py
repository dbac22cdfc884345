"""Command-line interface: summarize a document, evaluate systems, print stats.

Exit codes: 0 success, 1 parse/IO failure, 2 bad arguments.
"""

import argparse
import sys
from pathlib import Path

from . import corpus as corpus_io
from .exceptions import BensummError, UnknownSystem
from .fusion import FusionConfig, to_dot
from .metrics import (
    SYSTEMS,
    corpus_stats,
    evaluate_corpus,
    format_report_table,
    report_records,
)
from .summarizer import SummaryParams, summarize

MODE_NAMES = {"abs": "abstractive", "ext": "extractive"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bensumm",
        description="Unsupervised Bengali text summarization "
                    "(sentence clustering + word-graph fusion).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lexicon", metavar="PATH", help="word<TAB>POS lexicon file")
    common.add_argument("--stopwords", metavar="PATH", help="one stopword per line")
    common.add_argument("--vectors", metavar="PATH", help="word2vec-style text vectors")
    common.add_argument("--budget", type=int, default=3, metavar="N",
                        help="max summary sentences (default 3)")
    common.add_argument("--seed", type=int, default=0, metavar="N",
                        help="seed for the random baseline (default 0)")
    common.add_argument("--fusion-m", type=int, default=50, metavar="N",
                        dest="fusion_m", help="candidate path budget (default 50)")
    common.add_argument("--min-length", type=int, default=8, metavar="N",
                        help="minimum fused sentence tokens (default 8)")
    common.add_argument("--no-verb-check", action="store_true",
                        help="do not require a verb in fused sentences")

    p_sum = sub.add_parser("summarize", parents=[common],
                           help="summarize one document (raw text or .conll)")
    p_sum.add_argument("input", metavar="INPUT", help="document file")
    p_sum.add_argument("--mode", choices=("abs", "ext"), default="abs")
    p_sum.add_argument("--dump-graph", action="store_true",
                       help="write the word-graph DOT dump beside the input")

    p_eval = sub.add_parser("evaluate", parents=[common],
                            help="score systems on a JSON-lines corpus")
    p_eval.add_argument("corpus", metavar="CORPUS", help="JSON-lines corpus file")
    p_eval.add_argument("--systems", default=",".join(SYSTEMS), metavar="LIST",
                        help="comma-separated system names (default: all)")
    p_eval.add_argument("--out", metavar="PATH",
                        help="also write machine-readable report records")

    p_stats = sub.add_parser("stats", parents=[common],
                             help="print corpus statistics")
    p_stats.add_argument("corpus", metavar="CORPUS", help="JSON-lines corpus file")
    return parser


def _load_resources(args, need_vectors=True):
    lexicon = corpus_io.load_tag_lexicon(args.lexicon) if args.lexicon else corpus_io.TagLexicon()
    stopwords = corpus_io.load_stopwords(args.stopwords) if args.stopwords else frozenset()
    vectors = None
    if not need_vectors:
        return lexicon, stopwords, vectors
    if args.vectors:
        from .embed import load_word_vectors

        vectors = load_word_vectors(args.vectors)
    else:
        print(
            "warning: no word vectors given; clustering uses the "
            "term-frequency fallback",
            file=sys.stderr,
        )
    return lexicon, stopwords, vectors


def _params(args, vectors, mode="abstractive") -> SummaryParams:
    fusion = FusionConfig(
        max_paths=args.fusion_m,
        min_length=args.min_length,
        require_verb=not args.no_verb_check,
    )
    return SummaryParams(mode, args.budget, fusion, vectors)


def run_summarize(args) -> int:
    path = Path(args.input)
    if not path.exists():
        print(f"error: input file not found: {path}", file=sys.stderr)
        return 2
    lexicon, stopwords, vectors = _load_resources(args)
    if path.suffix == ".conll":
        document = corpus_io.load_pretagged(path, stopwords)
    else:
        document = corpus_io.preprocess(
            path.read_text(encoding="utf-8"), lexicon, stopwords, path.stem
        )
    mode = MODE_NAMES[args.mode]
    graphs = [] if args.dump_graph else None
    summary = summarize(document, _params(args, vectors, mode), collect_graphs=graphs)
    for sentence in summary.sentences:
        print(sentence.raw)
    if args.dump_graph:
        if graphs:
            dot_path = path.with_name(path.name + ".dot")
            dot_path.write_text(
                "\n".join(to_dot(g, f"cluster_{label}") for label, g in graphs) + "\n",
                encoding="utf-8",
            )
            print(f"word graphs written to {dot_path}", file=sys.stderr)
        else:
            print("note: no multi-sentence cluster was fused; no graph to dump",
                  file=sys.stderr)
    return 0


def run_evaluate(args) -> int:
    systems = [s.strip() for s in args.systems.split(",") if s.strip()]
    for system in systems:
        if system not in SYSTEMS:
            print(f"error: unknown system {system!r} (choose from {', '.join(SYSTEMS)})",
                  file=sys.stderr)
            return 2
    if not systems:
        print("error: no systems requested", file=sys.stderr)
        return 2
    lexicon, stopwords, vectors = _load_resources(args)
    samples = corpus_io.load_corpus(args.corpus, lexicon, stopwords)
    reports = [
        evaluate_corpus(samples, system, _params(args, vectors), seed=args.seed)
        for system in systems
    ]
    print(format_report_table(reports))
    if args.out:
        Path(args.out).write_text(report_records(reports), encoding="utf-8")
    return 0


def run_stats(args) -> int:
    lexicon, stopwords, _ = _load_resources(args, need_vectors=False)
    samples = corpus_io.load_corpus(args.corpus, lexicon, stopwords)
    stats = corpus_stats(samples)
    print(f"samples:               {stats.sample_count}")
    print(f"avg document tokens:   {stats.mean_document_tokens:.2f}")
    print(f"avg reference tokens:  {stats.mean_reference_tokens:.2f}")
    print(f"copy rate:             {100 * stats.mean_copy_rate:.2f}%")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "summarize": run_summarize,
        "evaluate": run_evaluate,
        "stats": run_stats,
    }
    try:
        return handlers[args.command](args)
    except UnknownSystem as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (BensummError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
