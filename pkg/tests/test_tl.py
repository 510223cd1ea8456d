import pytest

from rankertl import INF, START, Ranker, Word, defined_on, ranker, tl_spec
from rankertl.formulas import And, Atom, Not, Or, TOP
from rankertl.generators import extended_rankers
from rankertl.rankers import G, GL, H, HL, Step, X, XL, Y, YL, atom_step
from rankertl.tl import Mod, check_fragment, eval_at, models, ranker_formula
from rankertl.words import alphabet_of, imaginary_of


def example7_phi1():
    return Mod(X("a"), Not(Mod(Y("b"), TOP)))


def example7_phi2():
    return Or(Atom(G("b")), Mod(X("b"), Mod(Y("a"), TOP)))


def test_eval_at_historically_no():
    assert eval_at(Word.lasso("", "a"), Atom(H("a")), INF)
    assert not eval_at(Word.finite("a"), Atom(H("a")), INF)


def test_eval_at_example7_phi1():
    assert not eval_at(Word.finite("ba"), example7_phi1(), START)
    assert eval_at(Word.finite("ab"), example7_phi1(), START)


def test_models_basics():
    assert models(Word.finite("ab"), example7_phi2())
    assert models(Word.finite(""), TOP)
    assert models(Word.lasso("", "ab"), TOP)
    assert not models(Word.lasso("", "ab"), Mod(Y("a"), TOP))


def test_models_historically_no_characterisation(corpus_ab):
    for w in corpus_ab.words:
        expected = "a" in imaginary_of(w) or "a" not in alphabet_of(w)
        assert models(w, Atom(H("a"))) == expected


def test_check_fragment():
    assert check_fragment(example7_phi2(), tl_spec("X", "Y", "G", positive=True))
    assert not check_fragment(example7_phi1(), tl_spec("X", "Y", positive=True))
    phi3 = And(
        Mod(X("a"), TOP),
        Or(Atom(G("b")), Mod(X("b"), Mod(Y("a"), TOP))),
    )
    assert check_fragment(phi3, tl_spec("X", "Y", "G", positive=True, future_rooted=True))
    assert not check_fragment(Mod(Y("a"), TOP), tl_spec("X", "Y", future_rooted=True))
    assert not check_fragment(Mod(XL("a"), TOP), tl_spec("X", "Y"))


def test_rewrite_soundness(corpus_ab):
    # pushing a step modality through Boolean connectives preserves truth everywhere
    inner_a = Atom(G("a"))
    inner_b = Mod(Y("b"), TOP)
    for mk in (X, Y, XL, YL):
        step = mk("a")
        cases = [
            (Mod(step, Not(inner_a)), And(Mod(step, TOP), Not(Mod(step, inner_a)))),
            (Mod(step, Or(inner_a, inner_b)), Or(Mod(step, inner_a), Mod(step, inner_b))),
            (Mod(step, And(inner_a, inner_b)), And(Mod(step, inner_a), Mod(step, inner_b))),
        ]
        for w in corpus_ab.words[::5]:
            horizon = len(w.prefix) if w.is_finite else len(w.prefix) + 2 * len(w.period)
            for p in [START, *range(1, horizon + 1), INF]:
                for lhs, rhs in cases:
                    assert eval_at(w, lhs, p) == eval_at(w, rhs, p)


def test_ranker_as_formula_agreement(corpus_ab):
    for r in extended_rankers("ab", 2, lazy=False, include_lone_h=True):
        phi = ranker_formula(r)
        for w in corpus_ab.words[::3]:
            assert models(w, phi) == defined_on(w, r)
    for r in extended_rankers("ab", 2, lazy=True, include_lone_h=True):
        phi = ranker_formula(r)
        for w in corpus_ab.words[::3]:
            assert models(w, phi) == defined_on(w, r)


def test_atom_duality(corpus_ab):
    for atom in (G("a"), H("a"), GL("b"), HL("b")):
        lhs = Atom(atom)
        rhs = Mod(atom_step(atom), TOP)
        for w in corpus_ab.words[::7]:
            horizon = len(w.prefix) if w.is_finite else len(w.prefix) + 2 * len(w.period)
            for p in [START, *range(1, horizon + 1), INF]:
                assert eval_at(w, lhs, p) == (not eval_at(w, rhs, p))


def test_top_level_atoms_agree_on_finite_words(corpus_ab):
    for w in corpus_ab.finite_words():
        assert models(w, Atom(G("a"))) == models(w, Atom(H("a")))


def test_eval_rejects_interval_nodes():
    from rankertl.itl import F

    with pytest.raises(ValueError):
        eval_at(Word.finite("a"), F("a"), START)
