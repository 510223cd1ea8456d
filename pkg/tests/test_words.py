import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rankertl import INF, START, Word, alphabet_of, imaginary_of, letter_at, lt_itl


def unrolled(prefix, period, n):
    # independent oracle: explicit unrolling
    out = prefix
    while len(out) < n:
        out += period
    return out[:n]


def test_letter_at_finite():
    assert letter_at(Word.finite("abc"), 2) == "b"


def test_letter_at_lasso_matches_unrolling():
    w = Word.lasso("a", "bc")
    text = unrolled("a", "bc", 10)
    for i in range(1, 11):
        assert letter_at(w, i) == text[i - 1]


def test_letter_at_out_of_range():
    with pytest.raises(ValueError):
        letter_at(Word.finite("abc"), 5)


def test_letter_at_anchors_rejected():
    with pytest.raises(ValueError, match="anchor"):
        letter_at(Word.finite("abc"), START)
    with pytest.raises(ValueError, match="anchor"):
        letter_at(Word.lasso("a", "b"), INF)


def test_alphabet_of():
    assert alphabet_of(Word.finite("abca")) == frozenset("abc")
    assert alphabet_of(Word.lasso("ab", "c")) == frozenset("abc")
    assert alphabet_of(Word.finite("")) == frozenset()


def test_imaginary_of():
    assert imaginary_of(Word.finite("abc")) == frozenset()
    assert imaginary_of(Word.lasso("ab", "c")) == frozenset("c")
    assert imaginary_of(Word.lasso("", "ab")) == frozenset("ab")


def test_imaginary_subset_of_alphabet(corpus_ab):
    for w in corpus_ab.words:
        assert imaginary_of(w) <= alphabet_of(w)


def test_lt_itl_table():
    assert lt_itl(INF, INF)
    assert lt_itl(3, INF)
    assert not lt_itl(START, START)
    assert lt_itl(START, 1)
    assert not lt_itl(INF, 5)


def test_lt_itl_strict_total_order_on_finite():
    values = [START, 1, 2, 3]
    for p in values:
        assert not lt_itl(p, p)
        for q in values:
            if p != q:
                assert lt_itl(p, q) != lt_itl(q, p)


words_strategy = st.tuples(
    st.text(alphabet="ab", max_size=3),
    st.text(alphabet="ab", min_size=1, max_size=3),
    st.integers(min_value=1, max_value=3),
)


@settings(max_examples=60, deadline=None)
@given(words_strategy)
def test_representation_independence(case):
    u, v, k = case
    w = Word.lasso(u, v)
    variants = [Word.lasso(u + v, v), Word.lasso(u, v * k)]
    for other in variants:
        for i in range(1, 12):
            assert letter_at(w, i) == letter_at(other, i)
        assert alphabet_of(w) == alphabet_of(other)
        assert imaginary_of(w) == imaginary_of(other)
        assert w.canonical() == other.canonical()


def test_canonical_form():
    assert Word.lasso("ab", "abab").canonical() == Word.lasso("", "ab")
    assert Word.lasso("a", "bc").canonical() == Word.lasso("a", "bc")
    assert Word.finite("abc").canonical() == Word.finite("abc")


def test_lasso_period_must_be_nonempty():
    with pytest.raises(ValueError):
        Word.lasso("ab", "")
