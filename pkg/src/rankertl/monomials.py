"""Monomials A1*a1 ... Ak*ak A(k+1)^inf: membership, factorizations, unambiguity.

A factorization of a word is the strictly increasing tuple of its marker
positions.  Membership is exact on lassos: any factorization can be shifted
period by period so that the i-th marker lands at position <= |u| + i*|v|
(shifting a suffix of markers down by one period preserves every segment and
tail constraint), so a horizon of |u| + (k+1)*|v| positions is sufficient.

Unambiguity is reported as a bounded-search verdict.  The search itself runs
over marker interleavings rather than words: deleting all non-marker positions
from any word with two factorizations leaves a word of length <= 2k that still
has two factorizations, so the interleaving search is complete and every
witness it yields is short.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .words import Word

__all__ = [
    "Monomial",
    "AmbiguityWitness",
    "NoWitnessUpTo",
    "default_horizon",
    "member",
    "enumerate_factorizations",
    "check_unambiguous_bounded",
    "delta2_condition",
    "restrict",
]


@dataclass(frozen=True, slots=True)
class Monomial:
    """``blocks`` is a tuple of (letter-set, marker-letter) pairs; ``tail`` the final letter-set."""

    blocks: tuple
    tail: frozenset

    @property
    def degree(self) -> int:
        return len(self.blocks)

    def letter_sets(self) -> tuple:
        return tuple(A for A, _ in self.blocks) + (self.tail,)

    def markers(self) -> tuple:
        return tuple(a for _, a in self.blocks)


@dataclass(frozen=True, slots=True)
class AmbiguityWitness:
    word: Word


@dataclass(frozen=True, slots=True)
class NoWitnessUpTo:
    maxlen: int


def default_horizon(w: Word, m: Monomial) -> int:
    """Marker horizon sufficient for completeness of factorization search."""
    if w.period is None:
        return len(w.prefix)
    return len(w.prefix) + (m.degree + 1) * len(w.period)


def _suffix_letters(w: Word, pos: int) -> frozenset:
    """Letters occurring strictly after ``pos``."""
    if w.period is None:
        return frozenset(w.prefix[pos:])
    if pos >= len(w.prefix):
        return frozenset(w.period)
    return frozenset(w.prefix[pos:]) | frozenset(w.period)


def member(w: Word, m: Monomial) -> bool:
    """Exact membership of the word in the monomial's language."""
    horizon = default_horizon(w, m)
    text = w.unroll(horizon)
    reachable = {0}
    for A, a in m.blocks:
        nxt = set()
        for p in sorted(reachable):
            for q in range(p + 1, horizon + 1):
                letter = text[q - 1]
                if letter == a:
                    nxt.add(q)
                if letter not in A:
                    # segment letters must stay inside A; the marker letter
                    # bridges further positions only when it is in A itself
                    break
        reachable = nxt
        if not reachable:
            return False
    return any(_suffix_letters(w, p) <= m.tail for p in reachable)


def enumerate_factorizations(w: Word, m: Monomial, horizon: int | None = None) -> list:
    """All factorizations with markers <= horizon, in lexicographic order."""
    if horizon is None:
        horizon = default_horizon(w, m)
    if w.period is None:
        horizon = min(horizon, len(w.prefix))
    text = w.unroll(horizon)
    out = []
    blocks = m.blocks
    k = len(blocks)

    def extend(i: int, last: int, acc: tuple):
        if i == k:
            if _suffix_letters(w, last) <= m.tail:
                out.append(acc)
            return
        A, a = blocks[i]
        for q in range(last + 1, horizon + 1):
            letter = text[q - 1]
            if letter == a:
                extend(i + 1, q, acc + (q,))
            if letter not in A:
                break

    extend(0, 0, ())
    return out


def delta2_condition(m: Monomial) -> bool:
    """True iff for every j, the markers from j on are not all inside the j-th letter set."""
    markers = m.markers()
    for j, (A, _) in enumerate(m.blocks):
        if set(markers[j:]) <= A:
            return False
    return True


def restrict(m: Monomial, letter: str) -> Monomial:
    """Remove a letter from every letter set (markers are left untouched)."""
    return Monomial(
        tuple((A - {letter}, a) for A, a in m.blocks),
        m.tail - {letter},
    )


def _interleaving_witness(m: Monomial) -> Word | None:
    """Search for a word with two distinct factorizations.

    Patterns interleave two marker tuples; all filler segments are taken empty,
    which is always allowed because the letter-set segments admit the empty
    word.  Returns the first witness in a fixed search order, or None; None is
    conclusive for all word lengths.
    """
    k = m.degree
    if k == 0:
        return None
    sets = m.letter_sets()
    markers = m.markers()

    # state: markers placed by each side, letters emitted so far, any non-joint step yet
    def dfs(i: int, j: int, letters: tuple, distinct: bool):
        if i == k and j == k:
            return letters if distinct else None
        # joint marker for both sides
        if i < k and j < k and markers[i] == markers[j]:
            got = dfs(i + 1, j + 1, letters + (markers[i],), distinct)
            if got is not None:
                return got
        # marker for one side only: the other side sees it as a segment or tail
        # letter, so it must lie in that side's current letter set
        if i < k and markers[i] in sets[j]:
            got = dfs(i + 1, j, letters + (markers[i],), True)
            if got is not None:
                return got
        if j < k and markers[j] in sets[i]:
            got = dfs(i, j + 1, letters + (markers[j],), True)
            if got is not None:
                return got
        return None

    letters = dfs(0, 0, (), False)
    if letters is None:
        return None
    return Word.finite("".join(letters))


def _bounded_scan_witness(m: Monomial, alphabet: frozenset, maxlen: int) -> Word | None:
    """Literal bounded search over finite words and lassos; for cross-validation
    at small bounds (exponential in maxlen)."""
    letters = sorted(alphabet)

    def finite_words():
        for n in range(maxlen + 1):
            for tup in product(letters, repeat=n):
                yield Word.finite("".join(tup))

    def lassos():
        for nu in range(maxlen + 1):
            for u in product(letters, repeat=nu):
                for nv in range(1, maxlen + 1):
                    for v in product(letters, repeat=nv):
                        yield Word.lasso("".join(u), "".join(v))

    for w in finite_words():
        if len(enumerate_factorizations(w, m)) >= 2:
            return w
    for w in lassos():
        if len(enumerate_factorizations(w, m)) >= 2:
            return w
    return None


def check_unambiguous_bounded(m: Monomial, alphabet: frozenset, maxlen: int = 6):
    """Verdict on unambiguity: a witness word with two factorizations, or no witness.

    The necessary condition "markers all inside the first and last letter sets"
    is reported immediately with the doubled marker word as witness.  Otherwise
    the interleaving search runs; it is complete, so a NoWitnessUpTo verdict is
    in fact conclusive for every word length.
    """
    if maxlen < 1:
        raise ValueError("maxlen must be >= 1")
    k = m.degree
    if k == 0:
        return NoWitnessUpTo(maxlen)
    markers = m.markers()
    if set(markers) <= (m.blocks[0][0] & m.tail):
        return AmbiguityWitness(Word.finite("".join(markers) * 2))
    witness = _interleaving_witness(m)
    if witness is not None:
        return AmbiguityWitness(witness)
    return NoWitnessUpTo(maxlen)
