"""Bounded word-corpus enumeration and differential equivalence checking.

Acceptors are point formulas, interval formulas, rankers, ranker languages,
monomials and their complements, first-order sentences (finite words only),
and the usual set combinators.  Equivalence on a bounded corpus is evidence,
not proof; every check states its corpus explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import itl, tl
from .fo import Exists, Forall, Label, Leq, Less, NotLabel, fo_eval
from .formulas import And, Atom, Bottom, Not, Or, Top, walk
from .monomials import Monomial, member
from .rankers import Ranker, defined_on, eval_outside
from .tl import Mod
from .itl import First, Last
from .transforms import language_accepts
from .words import INF, Word, lt_itl

__all__ = [
    "Corpus",
    "build_corpus",
    "standard_corpus",
    "corpus_variant",
    "Counterexample",
    "MonomialComplement",
    "UnionOf",
    "IntersectionOf",
    "ComplementOf",
    "describe",
    "accepts",
    "equiv",
    "verdict_vector",
    "first_difference",
    "position_sweep",
]

_CORPUS_LIMIT = 10**7


@dataclass(frozen=True)
class Corpus:
    alphabet: frozenset
    finite_max: int
    lasso_u_max: int
    lasso_v_max: int
    words: tuple

    def finite_words(self):
        return tuple(w for w in self.words if w.is_finite)


def build_corpus(alphabet: frozenset, finite_max: int, u_max: int, v_max: int) -> Corpus:
    """Every finite word up to finite_max and every lasso with the given prefix and
    period bounds, in a fixed deterministic order."""
    letters = sorted(alphabet)
    if finite_max < 0 or u_max < 0 or v_max < 0:
        raise ValueError("corpus bounds must be non-negative")
    k = len(letters)

    def geo(lo, hi):
        return sum(k**n for n in range(lo, hi + 1))

    total = geo(0, finite_max)
    if v_max > 0:
        total += geo(0, u_max) * geo(1, v_max)
    if total > _CORPUS_LIMIT:
        raise ValueError(f"corpus of {total} words exceeds the {_CORPUS_LIMIT} limit")

    words = []
    for n in range(finite_max + 1):
        for tup in product(letters, repeat=n):
            words.append(Word.finite("".join(tup)))
    if v_max > 0:
        for nu in range(u_max + 1):
            for u in product(letters, repeat=nu):
                for nv in range(1, v_max + 1):
                    for v in product(letters, repeat=nv):
                        words.append(Word.lasso("".join(u), "".join(v)))
    return Corpus(frozenset(alphabet), finite_max, u_max, v_max, tuple(words))


def standard_corpus(alphabet) -> Corpus:
    """Project-wide corpora: two letters get (6, 3, 3), three letters (5, 2, 3)."""
    alphabet = frozenset(alphabet)
    if len(alphabet) <= 2:
        return build_corpus(alphabet, 6, 3, 3)
    if len(alphabet) == 3:
        return build_corpus(alphabet, 5, 2, 3)
    return build_corpus(alphabet, 4, 2, 2)


def corpus_variant(corpus: Corpus, mode: str) -> Corpus:
    """The same corpus with every lasso re-represented: 'absorb' turns (u, v) into
    (u+v, v), 'double' into (u, v+v).  Verdicts must not change."""
    def redo(w: Word) -> Word:
        if w.is_finite:
            return w
        if mode == "absorb":
            return Word.lasso(w.prefix + w.period, w.period)
        if mode == "double":
            return Word.lasso(w.prefix, w.period * 2)
        raise ValueError(f"unknown corpus variant {mode!r}")

    return Corpus(
        corpus.alphabet,
        corpus.finite_max,
        corpus.lasso_u_max,
        corpus.lasso_v_max,
        tuple(redo(w) for w in corpus.words),
    )


# -- acceptors ----------------------------------------------------------------


@dataclass(frozen=True)
class MonomialComplement:
    monomial: Monomial


@dataclass(frozen=True)
class UnionOf:
    parts: tuple


@dataclass(frozen=True)
class IntersectionOf:
    parts: tuple


@dataclass(frozen=True)
class ComplementOf:
    part: object


@dataclass(frozen=True)
class Counterexample:
    word: Word
    left: bool
    right: bool
    left_desc: str
    right_desc: str

    def record(self) -> dict:
        from .syntax import format_word

        return {
            "word": format_word(self.word),
            "left": self.left,
            "right": self.right,
            "acceptors": [self.left_desc, self.right_desc],
        }


_FO_NODES = (Label, NotLabel, Less, Leq, Exists, Forall)


def acceptor_kind(acc) -> str:
    if isinstance(acc, Ranker):
        return "ranker"
    if isinstance(acc, Monomial):
        return "monomial"
    if isinstance(acc, MonomialComplement):
        return "monomial-complement"
    if isinstance(acc, (UnionOf, IntersectionOf)):
        kinds = {acceptor_kind(p) for p in acc.parts}
        return "fo" if "fo" in kinds else "combinator"
    if isinstance(acc, ComplementOf):
        return "fo" if acceptor_kind(acc.part) == "fo" else "combinator"
    if isinstance(acc, (Top, Bottom, Not, And, Or, Atom, Mod, First, Last)):
        has_tl = has_itl = has_rankers = has_fo = False
        for node in walk(acc):
            if isinstance(node, Mod):
                has_tl = True
            elif isinstance(node, (First, Last)):
                has_itl = True
            elif isinstance(node, Ranker):
                has_rankers = True
            elif isinstance(node, _FO_NODES):
                has_fo = True
        if has_fo:
            return "fo"
        if has_rankers:
            return "ranker-language"
        if has_itl and has_tl:
            raise ValueError("formula mixes point and interval modalities")
        if has_itl:
            return "itl"
        # pure Boolean combinations of atoms evaluate identically either way
        return "tl"
    if isinstance(acc, _FO_NODES):
        return "fo"
    raise ValueError(f"not an acceptor: {acc!r}")


def uses_fo(acc) -> bool:
    return acceptor_kind(acc) == "fo"


def accepts(acc, w: Word, kind: str | None = None, memo: dict | None = None) -> bool:
    """Membership of the word in the acceptor's language.  ``memo`` may be shared
    between calls for one fixed word only."""
    if kind is None:
        kind = acceptor_kind(acc)
    if kind == "ranker":
        return defined_on(w, acc)
    if kind == "monomial":
        return member(w, acc)
    if kind == "monomial-complement":
        return not member(w, acc.monomial)
    if kind == "tl":
        return tl.models(w, acc, memo if memo is not None else {})
    if kind == "itl":
        return itl.models(w, acc, memo if memo is not None else {})
    if kind == "ranker-language":
        return language_accepts(w, acc, memo if memo is not None else {})
    if kind == "fo":
        return _fo_accepts(acc, w)
    if kind == "combinator":
        return _combinator_accepts(acc, w)
    raise ValueError(f"unknown acceptor kind {kind!r}")


def _combinator_accepts(acc, w: Word) -> bool:
    if isinstance(acc, UnionOf):
        return any(accepts(p, w) for p in acc.parts)
    if isinstance(acc, IntersectionOf):
        return all(accepts(p, w) for p in acc.parts)
    return not accepts(acc.part, w)


def _fo_accepts(acc, w: Word) -> bool:
    if isinstance(acc, UnionOf):
        return any(_fo_accepts(p, w) for p in acc.parts)
    if isinstance(acc, IntersectionOf):
        return all(_fo_accepts(p, w) for p in acc.parts)
    if isinstance(acc, ComplementOf):
        return not _fo_accepts(acc.part, w)
    return fo_eval(w, acc, {})


def describe(acc) -> str:
    from . import syntax

    kind = acceptor_kind(acc)
    if kind == "ranker":
        return f"ranker {syntax.format_ranker(acc)}"
    if kind == "monomial":
        return f"monomial {syntax.format_monomial(acc)}"
    if kind == "monomial-complement":
        return f"complement of monomial {syntax.format_monomial(acc.monomial)}"
    if kind == "tl":
        return f"tl {syntax.format_tl(acc)}"
    if kind == "itl":
        return f"itl {syntax.format_itl(acc)}"
    if kind == "ranker-language":
        return f"ranker language {syntax.format_ranker_language(acc)}"
    if kind == "fo":
        try:
            return f"fo {syntax.format_fo(acc)}"
        except Exception:
            return "fo combination"
    return "combination"


def equiv(a, b, corpus: Corpus) -> Counterexample | None:
    """First corpus word on which the two acceptors disagree, or None for a pass.

    If either side is first-order, both sides are restricted to the finite
    words of the corpus.
    """
    kind_a = acceptor_kind(a)
    kind_b = acceptor_kind(b)
    words = corpus.words
    if kind_a == "fo" or kind_b == "fo":
        words = corpus.finite_words()
    for w in words:
        va = accepts(a, w, kind_a)
        vb = accepts(b, w, kind_b)
        if va != vb:
            return Counterexample(w, va, vb, describe(a), describe(b))
    return None


def verdict_vector(acc, corpus: Corpus, kind: str | None = None) -> int:
    """Corpus verdicts packed into an integer, bit i for word i."""
    if kind is None:
        kind = acceptor_kind(acc)
    out = 0
    for i, w in enumerate(corpus.words):
        if accepts(acc, w, kind):
            out |= 1 << i
    return out


def first_difference(va: int, vb: int, corpus: Corpus) -> int | None:
    """Index of the first corpus word whose verdict bits differ."""
    diff = va ^ vb
    if diff == 0:
        return None
    return (diff & -diff).bit_length() - 1


_REL = {
    "<": lambda p, q, lt: lt(p, q),
    ">": lambda p, q, lt: lt(q, p),
    "<=": lambda p, q, lt: p == q or lt(p, q),
    ">=": lambda p, q, lt: p == q or lt(q, p),
}


def position_sweep(formula, r: Ranker, relation: str, corpus: Corpus, use_lt_itl: bool) -> Counterexample | None:
    """Check that the formula holds at exactly the positions standing in the given
    relation to the ranker position, over every corpus word where the ranker is
    defined.  Finite positions run to the word length (or prefix plus two
    periods); INF is swept when the interval order is requested.
    """
    rel = _REL[relation]
    lt = lt_itl if use_lt_itl else (lambda p, q: (q is INF and p is not INF) or (q is not INF and p is not INF and p < q))
    for w in corpus.words:
        target = eval_outside(w, r)
        if target is None:
            continue
        horizon = len(w.prefix) if w.is_finite else len(w.prefix) + 2 * len(w.period)
        positions = list(range(1, horizon + 1))
        if use_lt_itl:
            positions.append(INF)
        memo: dict = {}
        for p in positions:
            got = tl.eval_at(w, formula, p, memo)
            want = rel(p, target, lt)
            if got != want:
                return Counterexample(
                    w,
                    got,
                    want,
                    f"formula at position {p}",
                    f"position {p} {relation} ranker position {target}",
                )
    return None
