"""Word-vector loading and sentence embedding tests."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bensumm.embed import (
    SentenceVector,
    WordVectorTable,
    cosine_similarity,
    load_word_vectors,
    sentence_vector,
    tf_sentence_vectors,
)
from bensumm.exceptions import DimensionMismatch, ParseError

from .conftest import make_document, make_sentence


class TestLoadWordVectors:
    def test_basic_file_with_header(self, tmp_path):
        path = tmp_path / "vec.txt"
        path.write_text("2 3\ncat 1 0 0\ndog 0 1 0\n", encoding="utf-8")
        table = load_word_vectors(path)
        assert table.dim == 3
        assert len(table) == 2
        assert np.allclose(table.get("cat"), [1, 0, 0])

    def test_no_header(self, tmp_path):
        path = tmp_path / "vec.txt"
        path.write_text("cat 1 0 0\n", encoding="utf-8")
        assert load_word_vectors(path).dim == 3

    def test_dimension_mismatch_reports_line(self, tmp_path):
        path = tmp_path / "vec.txt"
        path.write_text("cat 1 0 0\ndog 1 0\n", encoding="utf-8")
        with pytest.raises(DimensionMismatch) as exc:
            load_word_vectors(path)
        assert exc.value.line == 2

    def test_duplicate_keeps_first(self, tmp_path):
        path = tmp_path / "vec.txt"
        path.write_text("cat 1 0\ncat 0 1\n", encoding="utf-8")
        table = load_word_vectors(path)
        assert len(table) == 1
        assert np.allclose(table.get("cat"), [1, 0])

    def test_bad_float(self, tmp_path):
        path = tmp_path / "vec.txt"
        path.write_text("cat 1 zebra\n", encoding="utf-8")
        with pytest.raises(ParseError):
            load_word_vectors(path)

    def test_empty_file(self, tmp_path):
        path = tmp_path / "vec.txt"
        path.write_text("", encoding="utf-8")
        with pytest.raises(ParseError):
            load_word_vectors(path)

    def test_words_normalized(self, tmp_path):
        path = tmp_path / "vec.txt"
        path.write_text("Cat 1 0\n", encoding="utf-8")
        assert "cat" in load_word_vectors(path)


class TestSentenceVector:
    def table(self):
        return WordVectorTable(2, {"cat": np.array([1.0, 0.0]),
                                   "dog": np.array([0.0, 1.0]),
                                   "the": np.array([0.5, 0.5])})

    def test_mean_of_content_words(self):
        s = make_sentence("cat dog", stopwords=frozenset())
        v = sentence_vector(s, self.table())
        assert np.allclose(v.values, [0.5, 0.5])

    def test_out_of_vocabulary_gives_zero(self):
        s = make_sentence("zebra lion")
        v = sentence_vector(s, self.table())
        assert v.is_zero and v.dim == 2

    def test_single_word_is_exact(self):
        s = make_sentence("cat zebra")
        v = sentence_vector(s, self.table())
        assert np.allclose(v.values, [1.0, 0.0])

    def test_stopword_fallback(self):
        # No content token in vocabulary: fall back to all covered tokens.
        s = make_sentence("the zebra", stopwords=frozenset({"the"}))
        v = sentence_vector(s, self.table())
        assert np.allclose(v.values, [0.5, 0.5])

    def test_permutation_invariant(self):
        a = sentence_vector(make_sentence("cat dog"), self.table())
        b = sentence_vector(make_sentence("dog cat"), self.table())
        assert np.allclose(a.values, b.values)


class TestCosineSimilarity:
    def test_identical_vectors(self):
        v = SentenceVector([1.0, 2.0])
        assert cosine_similarity(v, v) == pytest.approx(1.0)

    def test_orthogonal(self):
        assert cosine_similarity(
            SentenceVector([1.0, 0.0]), SentenceVector([0.0, 1.0])
        ) == pytest.approx(0.0)

    def test_zero_vector_convention(self):
        assert cosine_similarity(
            SentenceVector([0.0, 0.0]), SentenceVector([1.0, 1.0])
        ) == 0.0

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            cosine_similarity(SentenceVector([1.0]), SentenceVector([1.0, 0.0]))

    @given(
        st.lists(st.floats(-5, 5), min_size=2, max_size=5),
        st.lists(st.floats(-5, 5), min_size=2, max_size=5),
        st.floats(0.1, 20),
    )
    def test_symmetric_and_scale_invariant(self, a, b, alpha):
        size = min(len(a), len(b))
        va, vb = SentenceVector(a[:size]), SentenceVector(b[:size])
        forward = cosine_similarity(va, vb)
        assert forward == pytest.approx(cosine_similarity(vb, va), abs=1e-12)
        scaled = SentenceVector(np.array(a[:size]) * alpha)
        assert cosine_similarity(scaled, vb) == pytest.approx(forward, abs=1e-9)
        assert abs(forward) <= 1 + 1e-12


class TestTfSentenceVectors:
    def test_term_counts(self):
        doc = make_document(["cat cat dog", "dog fish"])
        vectors = tf_sentence_vectors(doc)
        # Vocabulary order: cat, dog, fish (first occurrence).
        assert np.allclose(vectors[0].values, [2, 1, 0])
        assert np.allclose(vectors[1].values, [0, 1, 1])

    def test_identical_sentences_cosine_one(self):
        doc = make_document(["a b c", "a b c"])
        v = tf_sentence_vectors(doc)
        assert cosine_similarity(v[0], v[1]) == pytest.approx(1.0)

    def test_disjoint_sentences_cosine_zero(self):
        doc = make_document(["a b", "c d"])
        v = tf_sentence_vectors(doc)
        assert cosine_similarity(v[0], v[1]) == pytest.approx(0.0)

    def test_stopwords_and_punct_excluded(self):
        doc = make_document(
            ["the cat .", "the dog ."], stopwords=frozenset({"the"})
        )
        vectors = tf_sentence_vectors(doc)
        assert vectors[0].dim == 2  # cat, dog only
