import pytest

from rankertl import (
    AmbiguityWitness,
    Monomial,
    NoWitnessUpTo,
    Word,
    check_unambiguous_bounded,
    delta2_condition,
    enumerate_factorizations,
    member,
)
from rankertl.generators import all_monomials
from rankertl.monomials import _bounded_scan_witness, default_horizon, restrict

G2 = frozenset("ab")
G3 = frozenset("abc")


def example2_style():
    # the single-monomial form of "first a before first b before first c";
    # ambiguous because the leading letter set contains its own marker and the
    # third block absorbs extra c letters
    return Monomial(
        ((frozenset("a"), "a"), (frozenset("ab"), "b"), (G3, "c")), G3
    )


def test_member_fixtures(chain_monomial_abc):
    m = example2_style()
    assert member(Word.finite("abc"), m)
    assert not member(Word.finite("bac"), m)
    assert member(Word.finite("abc"), chain_monomial_abc)
    assert not member(Word.finite("bac"), chain_monomial_abc)
    universal = Monomial((), G3)
    assert member(Word.finite(""), universal)
    assert member(Word.lasso("ab", "c"), universal)


def test_member_on_lassos(chain_monomial_abc):
    assert member(Word.lasso("ab", "c"), chain_monomial_abc)
    assert not member(Word.lasso("b", "ac"), chain_monomial_abc)
    # tail condition: suffix letters must stay inside the tail set
    m = Monomial(((frozenset("b"), "a"),), frozenset("a"))
    assert member(Word.lasso("b", "a"), m)
    assert not member(Word.lasso("ba", "b"), m)


def test_enumerate_factorizations():
    m = Monomial(((frozenset("a"), "a"),), frozenset("a"))
    assert enumerate_factorizations(Word.finite("aa"), m) == [(1,), (2,)]
    assert enumerate_factorizations(Word.finite("abc"), example2_style()) == [(1, 2, 3)]
    empty = Monomial(((frozenset(), "a"),), frozenset())
    assert enumerate_factorizations(Word.finite("b"), empty) == []


def test_member_iff_factorization_exists(corpus_ab):
    for m in all_monomials("ab", 2)[::7]:
        for w in corpus_ab.words[::5]:
            assert member(w, m) == bool(enumerate_factorizations(w, m))


def test_horizon_robustness(corpus_ab):
    # enlarging the marker horizon by two more periods never changes the outcome
    for m in all_monomials("ab", 3)[::41]:
        for w in corpus_ab.words[::9]:
            if w.is_finite:
                continue
            base = default_horizon(w, m)
            assert bool(enumerate_factorizations(w, m, base)) == bool(
                enumerate_factorizations(w, m, base + 2 * len(w.period))
            )


def test_check_unambiguous_fixtures():
    doubled = Monomial(((frozenset("a"), "a"),), frozenset("a"))
    verdict = check_unambiguous_bounded(doubled, frozenset("a"), 6)
    assert verdict == AmbiguityWitness(Word.finite("aa"))
    assert isinstance(check_unambiguous_bounded(Monomial((), G3), G3, 6), NoWitnessUpTo)
    # the single-monomial form above is ambiguous by its own factorizations,
    # double-checked against the literal bounded scan
    verdict = check_unambiguous_bounded(example2_style(), G3, 6)
    assert isinstance(verdict, AmbiguityWitness)
    assert _bounded_scan_witness(example2_style(), G3, 4) is not None


def test_chain_monomial_unambiguous(chain_monomial_abc):
    assert check_unambiguous_bounded(chain_monomial_abc, G3, 6) == NoWitnessUpTo(6)
    assert _bounded_scan_witness(chain_monomial_abc, G3, 3) is None


def test_witness_has_two_factorizations():
    for m in all_monomials("ab", 2):
        verdict = check_unambiguous_bounded(m, G2, 6)
        if isinstance(verdict, AmbiguityWitness):
            assert len(enumerate_factorizations(verdict.word, m)) >= 2


def test_checker_matches_literal_scan():
    for m in all_monomials("ab", 2):
        fast = isinstance(check_unambiguous_bounded(m, G2, 3), AmbiguityWitness)
        slow = _bounded_scan_witness(m, G2, 3) is not None
        assert fast == slow


def test_delta2_condition():
    assert delta2_condition(Monomial(((frozenset("b"), "a"),), G2))
    assert not delta2_condition(Monomial(((frozenset("a"), "a"),), frozenset("a")))
    assert delta2_condition(Monomial((), G2))


def test_restrict():
    m = example2_style()
    r = restrict(m, "c")
    assert r.blocks[2][0] == frozenset("ab")
    assert r.tail == frozenset("ab")
    assert r.markers() == m.markers()


def test_member_representation_independence(chain_monomial_abc):
    pairs = [("ab", "c"), ("", "abc"), ("b", "ac")]
    for u, v in pairs:
        w = Word.lasso(u, v)
        for other in (Word.lasso(u + v, v), Word.lasso(u, v * 2)):
            assert member(w, chain_monomial_abc) == member(other, chain_monomial_abc)


def test_maxlen_validation():
    with pytest.raises(ValueError):
        check_unambiguous_bounded(Monomial((), G2), G2, 0)
