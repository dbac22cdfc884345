"""Word-graph sentence fusion: merge a cluster of related sentences into one.

A directed graph is grown by adding sentences one at a time.  The first
sentence becomes a chain from a dummy start node to a dummy end node;
words of later sentences are mapped onto existing nodes with the same
(normalized word, POS) key when the mapping is unambiguous, with ties
resolved by immediate-context overlap, node frequency, and node id.
Stopwords and punctuation only merge when an adjacent non-stopword
neighbor matches, otherwise they get fresh nodes.

Edges are weighted so that frequently co-occurring, close word pairs are
cheap to traverse.  Candidate fusions are the lowest-weight loopless
start-to-end paths; after a length and verb filter they are re-ranked by
the keyphrases they cover, and the best path becomes the cluster's fused
sentence.
"""

import heapq
from dataclasses import dataclass, field, replace

import numpy as np

from .corpus import Sentence, Token, detokenize
from .exceptions import NoPath
from .pagerank import pagerank

KEYWORD_POS = ("NOUN", "PROPN", "ADJ")


@dataclass(frozen=True)
class FusionConfig:
    """Knobs for path generation and filtering.

    ``max_paths`` bounds how many candidate paths are enumerated;
    ``min_length`` and ``require_verb`` filter out fragments unlikely to
    be grammatical sentences.
    """

    max_paths: int = 50
    min_length: int = 8
    require_verb: bool = True

    def __post_init__(self):
        if self.max_paths < 1:
            raise ValueError("max_paths must be >= 1")
        if self.min_length < 1:
            raise ValueError("min_length must be >= 1")


@dataclass
class WGNode:
    """A graph vertex: a (word, POS) pair plus its occurrences.

    ``occurrences`` holds (sentence id, token offset) pairs, at most one
    per sentence; the dummy start/end nodes use offsets -1 and the
    sentence length.
    """

    id: int
    kind: str  # START, END or WORD
    word: str = ""
    pos: str = ""
    surface: str = ""
    is_stopword: bool = False
    occurrences: list = field(default_factory=list)

    @property
    def frequency(self) -> int:
        return len(self.occurrences)

    @property
    def key(self):
        return (self.word, self.pos)

    def hosts_sentence(self, sid) -> bool:
        return any(s == sid for s, _ in self.occurrences)

    def to_token(self) -> Token:
        return Token(self.surface, self.word, self.pos, self.is_stopword)


@dataclass
class WGEdge:
    source: int
    target: int
    count: int = 0
    weight: float = None


class WordGraph:
    """Directed word graph over a sentence cluster (node ids 0=start, 1=end)."""

    def __init__(self, cluster):
        self.cluster = list(cluster)
        self.nodes = [WGNode(0, "START"), WGNode(1, "END")]
        self.edges = {}
        self.successors = {}
        self.sentence_paths = []  # per sentence: node-id walk incl. start/end
        self._by_key = {}

    @property
    def start_id(self):
        return 0

    @property
    def end_id(self):
        return 1

    def new_node(self, token: Token, sid, offset) -> WGNode:
        node = WGNode(
            len(self.nodes), "WORD",
            token.normalized, token.pos, token.surface, token.is_stopword,
            [(sid, offset)],
        )
        self.nodes.append(node)
        self._by_key.setdefault(node.key, []).append(node.id)
        return node

    def candidates(self, token: Token, sid) -> list:
        """WORD nodes sharing the token's key that do not yet host sentence *sid*."""
        return [
            self.nodes[i]
            for i in self._by_key.get((token.normalized, token.pos), [])
            if not self.nodes[i].hosts_sentence(sid)
        ]

    def add_edge(self, source, target):
        edge = self.edges.get((source, target))
        if edge is None:
            edge = WGEdge(source, target)
            self.edges[(source, target)] = edge
            self.successors.setdefault(source, []).append(target)
        edge.count += 1


def _neighbor_words(sentence: Sentence, offset):
    """Normalized words adjacent to *offset*; None marks a sentence boundary."""
    tokens = sentence.tokens
    left = tokens[offset - 1].normalized if offset > 0 else None
    right = tokens[offset + 1].normalized if offset + 1 < len(tokens) else None
    return left, right


def _context_overlap(graph, node, sentence, offset, anchored):
    """How often the node's recorded neighbors match the token's neighbors.

    With ``anchored`` only matches on real, non-stopword neighbor words
    count (used for stopword/punctuation mapping); otherwise boundary
    markers match boundary markers too.
    """
    left, right = _neighbor_words(sentence, offset)
    overlap = 0
    for sid, off in node.occurrences:
        n_left, n_right = _neighbor_words(graph.cluster[sid], off)
        if anchored:
            if left is not None and left == n_left and not _is_stopword(graph, sid, off - 1):
                overlap += 1
            if right is not None and right == n_right and not _is_stopword(graph, sid, off + 1):
                overlap += 1
        else:
            if left == n_left:
                overlap += 1
            if right == n_right:
                overlap += 1
    return overlap


def _is_stopword(graph, sid, offset):
    tokens = graph.cluster[sid].tokens
    if 0 <= offset < len(tokens):
        return tokens[offset].is_stopword
    return False


def _best_candidate(candidates, overlaps):
    order = sorted(
        range(len(candidates)),
        key=lambda i: (-overlaps[i], -candidates[i].frequency, candidates[i].id),
    )
    return candidates[order[0]]


def build_word_graph(cluster) -> WordGraph:
    """Grow the word graph by mapping each sentence of *cluster* in turn.

    The first sentence becomes a fresh start-to-end chain.  Later
    sentences map their tokens in three passes: content words with at
    most one candidate, then ambiguous content words (context overlap,
    frequency, node id), then stopwords and punctuation, which require a
    matching non-stopword neighbor to merge.
    """
    graph = WordGraph(cluster)
    for sid, sentence in enumerate(graph.cluster):
        tokens = sentence.tokens
        if sid == 0:
            mapping = [graph.new_node(tok, sid, j).id for j, tok in enumerate(tokens)]
        else:
            mapping = [None] * len(tokens)

            # Pass 1: unambiguous content words.
            deferred = []
            for j, tok in enumerate(tokens):
                if not tok.is_content:
                    continue
                candidates = graph.candidates(tok, sid)
                if len(candidates) > 1:
                    deferred.append(j)
                elif candidates:
                    candidates[0].occurrences.append((sid, j))
                    mapping[j] = candidates[0].id
                else:
                    mapping[j] = graph.new_node(tok, sid, j).id

            # Pass 2: ambiguous content words, best candidate by context.
            for j in deferred:
                tok = tokens[j]
                candidates = graph.candidates(tok, sid)
                if not candidates:
                    mapping[j] = graph.new_node(tok, sid, j).id
                    continue
                overlaps = [
                    _context_overlap(graph, c, sentence, j, anchored=False)
                    for c in candidates
                ]
                chosen = _best_candidate(candidates, overlaps)
                chosen.occurrences.append((sid, j))
                mapping[j] = chosen.id

            # Pass 3: stopwords and punctuation, merged only on an anchor.
            for j, tok in enumerate(tokens):
                if tok.is_content:
                    continue
                candidates = graph.candidates(tok, sid)
                overlaps = [
                    _context_overlap(graph, c, sentence, j, anchored=True)
                    for c in candidates
                ]
                if candidates and max(overlaps) >= 1:
                    chosen = _best_candidate(candidates, overlaps)
                    chosen.occurrences.append((sid, j))
                    mapping[j] = chosen.id
                else:
                    mapping[j] = graph.new_node(tok, sid, j).id

        graph.nodes[graph.start_id].occurrences.append((sid, -1))
        graph.nodes[graph.end_id].occurrences.append((sid, len(tokens)))
        walk = [graph.start_id] + mapping + [graph.end_id]
        for a, b in zip(walk, walk[1:]):
            graph.add_edge(a, b)
        graph.sentence_paths.append(walk)
    return graph


def weight_edges(graph: WordGraph) -> WordGraph:
    """Assign each edge a traversal cost (lower = stronger connection).

    The raw strength divides the endpoint frequencies by how closely the
    pair co-occurs across sentences, and the final weight divides once
    more by both frequencies so that paths through frequent nodes stay
    cheap:

        w'(i, j) = (freq(i) + freq(j)) / sum over sentences of
                   1 / (pos(j) - pos(i))    [where i precedes j]
        w(i, j)  = w'(i, j) / (freq(i) * freq(j))
    """
    positions = [
        {sid: off for sid, off in node.occurrences} for node in graph.nodes
    ]
    for (source, target), edge in graph.edges.items():
        freq_i = graph.nodes[source].frequency
        freq_j = graph.nodes[target].frequency
        diff_sum = 0.0
        for sid, pos_i in positions[source].items():
            pos_j = positions[target].get(sid)
            if pos_j is not None and pos_i < pos_j:
                diff_sum += 1.0 / (pos_j - pos_i)
        strength = (freq_i + freq_j) / diff_sum if diff_sum > 0 else float(freq_i + freq_j)
        edge.weight = strength / (freq_i * freq_j)
    return graph


@dataclass
class FusionPath:
    """A candidate fusion: interior node ids with their resolved tokens."""

    node_ids: tuple
    tokens: list
    total_weight: float
    score: float = 0.0

    @property
    def token_length(self) -> int:
        return len(self.tokens)

    def normalized_words(self) -> list[str]:
        return [t.normalized for t in self.tokens]


def k_shortest_paths(graph: WordGraph, max_paths: int) -> list[FusionPath]:
    """Up to *max_paths* loopless start-to-end paths, cheapest first.

    Best-first enumeration over partial simple paths, with the heap keyed
    by (cumulative weight, node-id sequence) so that equal-weight paths
    come out in lexicographic node-id order.
    """
    start, end = graph.start_id, graph.end_id
    heap = [(0.0, (start,))]
    results = []
    while heap and len(results) < max_paths:
        cost, path = heapq.heappop(heap)
        node = path[-1]
        if node == end:
            interior = path[1:-1]
            results.append(FusionPath(
                interior,
                [graph.nodes[i].to_token() for i in interior],
                cost,
            ))
            continue
        for succ in graph.successors.get(node, ()):
            if succ in path:
                continue
            weight = graph.edges[(node, succ)].weight
            heapq.heappush(heap, (cost + weight, path + (succ,)))
    if not results:
        raise NoPath("word graph has no start-to-end path")
    return results


def filter_paths(paths, config: FusionConfig) -> list[FusionPath]:
    """Keep paths long enough and (when required) containing a verb."""
    kept = []
    for path in paths:
        if path.token_length < config.min_length:
            continue
        if config.require_verb and not any(t.pos == "VERB" for t in path.tokens):
            continue
        kept.append(path)
    return kept


def extract_keyphrases(cluster) -> dict:
    """Salient phrases of the cluster scored by TextRank over content words.

    Nouns, proper nouns and adjectives become graph nodes; words co-occur
    when adjacent in a sentence's content-word sequence (window 2).  After
    PageRank, maximal runs of adjacent words scoring at least the mean
    merge into phrases whose score is the sum of the member scores.
    """
    index = {}
    for sentence in cluster:
        for tok in sentence.tokens:
            if tok.is_content and tok.pos in KEYWORD_POS and tok.normalized not in index:
                index[tok.normalized] = len(index)
    if not index:
        return {}

    weights = np.zeros((len(index), len(index)))
    for sentence in cluster:
        chain = [
            t.normalized for t in sentence.tokens
            if t.is_content and t.pos in KEYWORD_POS
        ]
        for a, b in zip(chain, chain[1:]):
            if a != b:
                weights[index[a], index[b]] += 1.0
                weights[index[b], index[a]] += 1.0
    scores = pagerank(weights)
    mean_score = scores.mean()

    phrases = {}
    for sentence in cluster:
        run = []
        for tok in sentence.tokens + [None]:
            eligible = (
                tok is not None
                and tok.is_content
                and tok.pos in KEYWORD_POS
                and scores[index[tok.normalized]] >= mean_score
            )
            if eligible:
                run.append(tok.normalized)
            elif run:
                phrase = tuple(run)
                phrases.setdefault(
                    phrase, float(sum(scores[index[w]] for w in phrase))
                )
                run = []
    return phrases


def rank_fusions(paths, keyphrases) -> list[FusionPath]:
    """Sort candidate paths by weight per token, discounted by keyphrase coverage.

    score(p) = total_weight / (length * (1 + sum of scores of keyphrases
    appearing contiguously in p)); lower is better, sort is stable.
    """
    def contains(words, phrase):
        k = len(phrase)
        return any(tuple(words[i:i + k]) == phrase for i in range(len(words) - k + 1))

    scored = []
    for path in paths:
        words = path.normalized_words()
        coverage = sum(
            score for phrase, score in keyphrases.items() if contains(words, phrase)
        )
        score = path.total_weight / (path.token_length * (1.0 + coverage))
        scored.append(replace(path, score=score))
    return sorted(scored, key=lambda p: p.score)


def fuse_cluster_detailed(cluster, config=FusionConfig()):
    """Fuse a cluster, also returning the word graph (None for singletons)."""
    cluster = list(cluster)
    if len(cluster) == 1:
        return cluster[0], None
    graph = weight_edges(build_word_graph(cluster))
    try:
        paths = k_shortest_paths(graph, config.max_paths)
    except NoPath:
        paths = []
    kept = filter_paths(paths, config)
    if not kept:
        kept = filter_paths(paths, replace(config, min_length=1))
    if not kept:
        kept = list(paths)
    if not kept:
        return max(cluster, key=lambda s: (len(s.tokens), -s.index)), graph
    ranked = rank_fusions(kept, extract_keyphrases(cluster))
    best = ranked[0]
    fused = Sentence(
        min(s.index for s in cluster), best.tokens, detokenize(best.tokens)
    )
    return fused, graph


def fuse_cluster(cluster, config=FusionConfig()) -> Sentence:
    """Produce one sentence covering the cluster.

    Singleton clusters pass through verbatim.  Otherwise the best ranked
    path becomes the fused sentence; when filtering leaves nothing the
    length constraint is dropped, then the verb constraint, and as a last
    resort the cluster's longest original sentence is returned.
    """
    return fuse_cluster_detailed(cluster, config)[0]


def to_dot(graph: WordGraph, name="wordgraph") -> str:
    """Render the graph in DOT format for inspection."""
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for node in graph.nodes:
        if node.kind == "WORD":
            label = f"{node.word}/{node.pos}\\nf={node.frequency}"
        else:
            label = node.kind
        lines.append(f'  n{node.id} [label="{label}"];')
    for (source, target), edge in sorted(graph.edges.items()):
        label = f"{edge.weight:.3f}" if edge.weight is not None else str(edge.count)
        lines.append(f'  n{source} -> n{target} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines)
