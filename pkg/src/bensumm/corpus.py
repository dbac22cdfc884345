"""Text ingestion: sentence segmentation, tokenization, POS tagging and corpus loading.

Raw text is segmented on Bengali danda/question/exclamation/period marks,
tokenized on whitespace with punctuation detached, and tagged through a
word-to-POS lexicon (OOV words default to NOUN).  Pre-tagged input in a
tab-separated two-column format is accepted as-is.  Document-summary
corpora are read from JSON-lines files with ``id``/``document``/``summary``
string fields.
"""

import json
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path

from .exceptions import EmptyCorpus, EmptyInput, ParseError

POS_TAGS = frozenset({
    "NOUN", "PROPN", "VERB", "ADJ", "ADV", "PRON",
    "ADP", "CONJ", "PART", "NUM", "PUNCT", "OTHER",
})

# Bengali danda is the primary terminator; Latin ones accepted for smoke tests.
SENTENCE_TERMINATORS = "।?!."


def normalize(text: str) -> str:
    """NFC-normalize and lowercase (lowercasing is a no-op for Bengali script)."""
    return unicodedata.normalize("NFC", text).lower()


def is_punct_token(surface: str) -> bool:
    """True when every character of *surface* is Unicode punctuation."""
    return bool(surface) and all(
        unicodedata.category(ch).startswith("P") for ch in surface
    )


@dataclass(frozen=True)
class Token:
    """A single token with its normalized form, POS tag and filter flags.

    ``is_punct`` is derived from the tag so that ``is_punct == (pos == "PUNCT")``
    holds no matter where the tag came from (lexicon or pre-tagged file).
    """

    surface: str
    normalized: str
    pos: str
    is_stopword: bool = False

    @property
    def is_punct(self) -> bool:
        return self.pos == "PUNCT"

    @property
    def is_content(self) -> bool:
        """Neither stopword nor punctuation."""
        return not self.is_stopword and not self.is_punct


@dataclass
class Sentence:
    """An ordered token list with its 0-based position in the document."""

    index: int
    tokens: list[Token]
    raw: str

    def __len__(self):
        return len(self.tokens)

    def surfaces(self) -> list[str]:
        return [t.surface for t in self.tokens]

    def content_words(self) -> list[str]:
        return [t.normalized for t in self.tokens if t.is_content]


@dataclass
class Document:
    """An identified, ordered list of sentences."""

    id: str
    sentences: list[Sentence]

    def __len__(self):
        return len(self.sentences)

    def tokens(self) -> list[Token]:
        return [t for s in self.sentences for t in s.tokens]


@dataclass
class CorpusSample:
    """A source document paired with its human reference summary."""

    id: str
    document: Document
    reference_summary: Document


@dataclass
class TagLexicon:
    """Total word-to-POS lookup: unknown words fall back to ``default_tag``."""

    entries: dict = field(default_factory=dict)
    default_tag: str = "NOUN"

    def tag(self, normalized_word: str) -> str:
        return self.entries.get(normalized_word, self.default_tag)


def segment_sentences(raw_text: str) -> list[str]:
    """Split *raw_text* into sentences on terminator characters.

    Terminators stay attached to their sentence; a newline also closes the
    current sentence.  Raises :class:`EmptyInput` if nothing remains.
    """
    sentences = []
    for line in raw_text.splitlines() or [raw_text]:
        current = []
        for ch in line:
            current.append(ch)
            if ch in SENTENCE_TERMINATORS:
                piece = "".join(current).strip()
                if piece:
                    sentences.append(piece)
                current = []
        piece = "".join(current).strip()
        if piece:
            sentences.append(piece)
    if not sentences:
        raise EmptyInput("no sentences found in input text")
    return sentences


def tokenize(raw_sentence: str) -> list[str]:
    """Split on whitespace, detaching each punctuation character as its own token."""
    surfaces = []
    for chunk in raw_sentence.split():
        word = []
        for ch in chunk:
            if unicodedata.category(ch).startswith("P"):
                if word:
                    surfaces.append("".join(word))
                    word = []
                surfaces.append(ch)
            else:
                word.append(ch)
        if word:
            surfaces.append("".join(word))
    return surfaces


def detokenize(tokens: list[Token]) -> str:
    """Join token surfaces with single spaces, omitting the space before punctuation."""
    parts = []
    for tok in tokens:
        if parts and not tok.is_punct:
            parts.append(" ")
        parts.append(tok.surface)
    return "".join(parts)


def tag_tokens(surfaces, lexicon: TagLexicon, stopwords=frozenset()) -> list[Token]:
    """Attach POS tags and stopword flags to a list of token surfaces.

    Pure punctuation is tagged PUNCT regardless of the lexicon; other words
    get the lexicon tag or the lexicon's default.
    """
    tokens = []
    for surface in surfaces:
        norm = normalize(surface)
        if is_punct_token(surface):
            pos = "PUNCT"
        else:
            pos = lexicon.tag(norm)
        tokens.append(Token(surface, norm, pos, norm in stopwords))
    return tokens


def preprocess(raw_text, lexicon=None, stopwords=frozenset(), doc_id="doc") -> Document:
    """Run the full segment/tokenize/tag pipeline over raw text."""
    lexicon = lexicon or TagLexicon()
    sentences = []
    for i, raw in enumerate(segment_sentences(raw_text)):
        tokens = tag_tokens(tokenize(raw), lexicon, stopwords)
        sentences.append(Sentence(i, tokens, raw))
    return Document(doc_id, sentences)


def load_pretagged(path, stopwords=frozenset()) -> Document:
    """Read a tab-separated ``surface<TAB>POS`` file, blank line per sentence.

    Tags outside the fixed tagset map to OTHER; ``#`` lines are comments.
    """
    path = Path(path)
    sentences = []
    current = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if line.startswith("#"):
                continue
            if not line.strip():
                if current:
                    sentences.append(current)
                    current = []
                continue
            fields = line.split("\t")
            if len(fields) != 2 or not fields[0]:
                raise ParseError(
                    f"expected 'surface<TAB>POS', got {line!r}", line=lineno
                )
            surface, tag = fields[0], fields[1].strip()
            if tag not in POS_TAGS:
                tag = "OTHER"
            norm = normalize(surface)
            current.append(Token(surface, norm, tag, norm in stopwords))
    if current:
        sentences.append(current)
    if not sentences:
        raise EmptyInput(f"no sentences in {path}")
    return Document(
        path.stem,
        [
            Sentence(i, toks, detokenize(toks))
            for i, toks in enumerate(sentences)
        ],
    )


def load_corpus(path, lexicon=None, stopwords=frozenset()) -> list[CorpusSample]:
    """Load a JSON-lines corpus of ``{id, document, summary}`` records.

    Both text fields go through the full preprocessing pipeline.
    """
    lexicon = lexicon or TagLexicon()
    samples = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON: {exc}", line=lineno) from exc
            if not isinstance(record, dict):
                raise ParseError("record is not an object", line=lineno)
            for key in ("id", "document", "summary"):
                if key not in record:
                    raise ParseError(f"missing field {key!r}", line=lineno)
                if not isinstance(record[key], str):
                    raise ParseError(f"field {key!r} is not a string", line=lineno)
                if key != "id" and not record[key].strip():
                    raise ParseError(f"field {key!r} is empty", line=lineno)
            sample_id = record["id"]
            samples.append(
                CorpusSample(
                    sample_id,
                    preprocess(record["document"], lexicon, stopwords, sample_id),
                    preprocess(
                        record["summary"], lexicon, stopwords, f"{sample_id}-ref"
                    ),
                )
            )
    if not samples:
        raise EmptyCorpus(f"no samples in {path}")
    return samples


def load_stopwords(path) -> frozenset:
    """Read a one-word-per-line stopword file; ``#`` lines are comments."""
    words = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            word = line.strip()
            if word and not word.startswith("#"):
                words.add(normalize(word))
    return frozenset(words)


def load_tag_lexicon(path, default_tag="NOUN") -> TagLexicon:
    """Read a ``word<TAB>POS`` lexicon file; unknown tags map to OTHER."""
    entries = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 2 or not fields[0]:
                raise ParseError(
                    f"expected 'word<TAB>POS', got {line!r}", line=lineno
                )
            tag = fields[1].strip()
            if tag not in POS_TAGS:
                tag = "OTHER"
            entries.setdefault(normalize(fields[0]), tag)
    return TagLexicon(entries, default_tag)
