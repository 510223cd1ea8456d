import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rankertl import (
    INF,
    START,
    Ranker,
    Word,
    alph_gamma,
    alphabet_of,
    classify,
    defined_on,
    eval_from,
    eval_outside,
    imaginary_of,
    ranker,
    step_eval,
)
from rankertl.generators import step_rankers
from rankertl.rankers import G, H, HL, X, XL, Y, YL, reflavor


def naive_next(w, a, p, horizon=20):
    # independent oracle: scan the unrolled word
    text = w.unroll(horizon)
    for q in range(p + 1, len(text) + 1):
        if text[q - 1] == a:
            return q
    return None


def test_step_table_at_infinity():
    aw = Word.lasso("", "a")
    assert step_eval(aw, Y("a"), INF) is None
    assert step_eval(aw, YL("a"), INF) is INF
    assert step_eval(aw, X("a"), INF) is None
    assert step_eval(aw, XL("a"), INF) is INF
    mixed = Word.lasso("b", "a")
    assert step_eval(mixed, Y("b"), INF) == 1
    assert step_eval(mixed, YL("b"), INF) == 1
    assert step_eval(mixed, XL("b"), INF) is None


def test_step_eager_next_matches_naive_scan(corpus_ab):
    for w in corpus_ab.words[:80]:
        for a in "ab":
            for p in range(0, 6):
                assert step_eval(w, X(a), p) == naive_next(w, a, p)


def test_step_from_start_and_yesterday():
    assert step_eval(Word.finite("ba"), X("a"), START) == 2
    assert step_eval(Word.finite("ba"), Y("a"), START) is None


def test_eval_from():
    assert eval_from(Word.finite("ab"), ranker(X("b"), Y("a")), START) == 1
    w = Word.lasso("", "ab")
    assert eval_from(w, ranker(YL("a"), XL("b")), INF) is INF
    r = Ranker((), None)
    assert eval_from(Word.finite("xyz".replace("x", "a")), r, 2) == 2


def test_eval_outside():
    assert eval_outside(Word.finite("ba"), ranker(Y("a"))) == 2
    assert eval_outside(Word.lasso("", "a"), ranker(Y("a"))) is None
    assert eval_outside(Word.finite("b"), ranker(G("a"))) == START
    with pytest.raises(ValueError):
        eval_outside(Word.finite("ab"), Ranker((), None))


def test_defined_on_example_language():
    # first a before first b before first c, as the intersection of two rankers
    r1, r2 = ranker(X("b"), Y("a")), ranker(X("c"), Y("b"))
    assert defined_on(Word.finite("abc"), r1) and defined_on(Word.finite("abc"), r2)
    assert not defined_on(Word.finite("bac"), r1)
    assert defined_on(Word.finite("bac"), Ranker((), None))
    assert defined_on(Word.lasso("", "ab"), ranker(YL("a")))


def test_alph_gamma_and_classify():
    r = ranker(X("b"), Y("a"))
    assert alph_gamma(r) == frozenset("ab")
    assert classify(r) == ("X", "eager")
    assert alph_gamma(Ranker((), None)) == frozenset()
    assert alph_gamma(ranker(G("a"))) == frozenset("a")
    assert classify(ranker(YL("a"), XL("b"))) == ("Y", "lazy")
    assert classify(ranker(H("a"))) == ("Y", "eager")
    with pytest.raises(ValueError):
        classify(Ranker((), None))


def test_flavor_mixing_rejected():
    with pytest.raises(ValueError, match="mixes"):
        Ranker((X("a"), YL("b")), None)
    with pytest.raises(ValueError, match="mixes"):
        Ranker((X("a"),), HL("b"))


def test_finite_word_coincidence(corpus_ab):
    finite = corpus_ab.finite_words()
    for r in step_rankers("ab", 3, lazy=False):
        rl = reflavor(r, True)
        for w in finite:
            assert eval_outside(w, r) == eval_outside(w, rl)


def test_x_ranker_all_word_coincidence(corpus_ab):
    for r in step_rankers("ab", 3, lazy=False, first_dir="X"):
        rl = reflavor(r, True)
        for w in corpus_ab.words:
            assert eval_outside(w, r) == eval_outside(w, rl)


def test_eager_never_infinite(corpus_ab):
    for r in step_rankers("ab", 3, lazy=False):
        for w in corpus_ab.words:
            pos = eval_outside(w, r)
            assert pos is not INF


def test_lazy_infinite_iff_past_rooted_with_imaginary_letters(corpus_ab):
    for r in step_rankers("ab", 3, lazy=True):
        for w in corpus_ab.words:
            pos = eval_outside(w, r)
            expected = classify(r)[0] == "Y" and alph_gamma(r) <= imaginary_of(w)
            assert (pos is INF) == expected


def test_monotone_steps(corpus_ab):
    for w in corpus_ab.words[:60]:
        for a in "ab":
            for p in range(0, 8):
                nxt = step_eval(w, X(a), p)
                if nxt is not None:
                    assert nxt > p
                prv = step_eval(w, Y(a), p)
                if prv is not None:
                    assert prv < p


@settings(max_examples=80, deadline=None)
@given(
    st.text(alphabet="ab", max_size=5),
    st.lists(st.sampled_from(["Xa", "Xb", "Ya", "Yb"]), min_size=1, max_size=4),
)
def test_random_finite_word_coincidence(text, tokens):
    steps = tuple(X(t[1]) if t[0] == "X" else Y(t[1]) for t in tokens)
    r = Ranker(steps, None)
    w = Word.finite(text)
    assert eval_outside(w, r) == eval_outside(w, reflavor(r, True))
