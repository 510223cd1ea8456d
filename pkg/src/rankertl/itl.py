"""Unambiguous interval temporal logic over intervals (x; y) of positions.

Interval membership uses the order with INF < INF, so (INF; INF) denotes the
singleton {INF}.  The first/last modalities split an interval at the unique
first or last occurrence of a letter; sub-calls always stay inside the parent
interval, which is what distinguishes this logic from plain rankers (no
crossing over).
"""

from __future__ import annotations

from dataclasses import dataclass

from .formulas import And, Atom, Bottom, Not, Or, Top, TOP, disj_all, neg
from .rankers import AtomicModality, Step, step_eval
from .words import INF, START, Position, Word, alphabet_of, lt_itl

__all__ = [
    "First",
    "Last",
    "Interval",
    "F", "FL", "L", "LL",
    "eval_interval",
    "models",
    "check_itl_fragment",
    "is_future_formula",
]


@dataclass(frozen=True, slots=True)
class First:
    letter: str
    left: object
    right: object
    lazy: bool = False


@dataclass(frozen=True, slots=True)
class Last:
    letter: str
    left: object
    right: object
    lazy: bool = False


def F(a, left=TOP, right=TOP):
    return First(a, left, right, False)


def FL(a, left=TOP, right=TOP):
    return First(a, left, right, True)


def L(a, left=TOP, right=TOP):
    return Last(a, left, right, False)


def LL(a, left=TOP, right=TOP):
    return Last(a, left, right, True)


@dataclass(frozen=True, slots=True)
class Interval:
    lo: Position
    hi: Position

    def contains(self, p: Position) -> bool:
        return lt_itl(self.lo, p) and lt_itl(p, self.hi)


_expansions: dict = {}


def _atom_expansion(m: AtomicModality, alph: frozenset):
    """The defining formula of an atomic modality, with the big disjunction of
    the lazy historically-no case ranging over the given alphabet."""
    key = (m.kind, m.lazy, m.letter, alph)
    hit = _expansions.get(key)
    if hit is not None:
        return hit
    a = m.letter
    if m.kind == "G":
        out = neg(First(a, TOP, TOP, m.lazy))
    elif not m.lazy:
        out = neg(Last(a, TOP, TOP, False))
    else:
        infinitely_often = disj_all(
            First(b, Last(b, TOP, TOP, True), TOP, True) for b in sorted(alph)
        )
        out = Or(neg(Last(a, TOP, TOP, True)), infinitely_often) if not isinstance(
            infinitely_often, Bottom
        ) else neg(Last(a, TOP, TOP, True))
    _expansions[key] = out
    return out


def eval_interval(w: Word, phi, iv: Interval, memo: dict | None = None) -> bool:
    """Truth of ``phi`` on the open interval ``iv`` of ``w``."""
    if memo is None:
        memo = {}
    return _eval(w, phi, iv.lo, iv.hi, memo)


def _eval(w, phi, lo, hi, memo) -> bool:
    t = type(phi)
    if t is Top:
        return True
    if t is Bottom:
        return False
    key = (id(phi), lo, hi)
    hit = memo.get(key)
    if hit is not None:
        return hit is True
    if t is First:
        m = step_eval(w, Step("X", phi.letter, phi.lazy), lo)
        out = (
            m is not None
            and lt_itl(m, hi)
            and _eval(w, phi.left, lo, m, memo)
            and _eval(w, phi.right, m, hi, memo)
        )
    elif t is Last:
        m = step_eval(w, Step("Y", phi.letter, phi.lazy), hi)
        out = (
            m is not None
            and lt_itl(lo, m)
            and _eval(w, phi.left, lo, m, memo)
            and _eval(w, phi.right, m, hi, memo)
        )
    elif t is Atom:
        out = _eval(w, _atom_expansion(phi.modality, alphabet_of(w)), lo, hi, memo)
    elif t is Not:
        out = not _eval(w, phi.child, lo, hi, memo)
    elif t is And:
        out = _eval(w, phi.left, lo, hi, memo) and _eval(w, phi.right, lo, hi, memo)
    elif t is Or:
        out = _eval(w, phi.left, lo, hi, memo) or _eval(w, phi.right, lo, hi, memo)
    else:
        raise ValueError(f"not an interval-logic node: {phi!r}")
    memo[key] = out
    return out


def models(w: Word, phi, memo: dict | None = None) -> bool:
    """Top-level satisfaction: truth on the whole-word interval (START; INF)."""
    if memo is None:
        memo = {}
    return _eval(w, phi, START, INF, memo)


def check_itl_fragment(phi, allowed: frozenset, positive: bool) -> bool:
    """Syntactic fragment membership; ``allowed`` holds (kind, lazy) pairs with
    kinds 'F', 'L', 'G', 'H'."""
    t = type(phi)
    if t in (Top,):
        return True
    if t is Bottom:
        return not positive
    if t is Not:
        return not positive and check_itl_fragment(phi.child, allowed, positive)
    if t in (And, Or):
        return check_itl_fragment(phi.left, allowed, positive) and check_itl_fragment(
            phi.right, allowed, positive
        )
    if t is First:
        return ("F", phi.lazy) in allowed and all(
            check_itl_fragment(c, allowed, positive) for c in (phi.left, phi.right)
        )
    if t is Last:
        return ("L", phi.lazy) in allowed and all(
            check_itl_fragment(c, allowed, positive) for c in (phi.left, phi.right)
        )
    if t is Atom:
        return (phi.modality.kind, phi.modality.lazy) in allowed
    return False


def is_future_formula(phi) -> bool:
    """True iff every past modality sits inside the left operand of some first-modality,
    so it is never interpreted over an unbounded interval."""
    return _future_ok(phi, False)


def _future_ok(phi, protected: bool) -> bool:
    t = type(phi)
    if t in (Top, Bottom):
        return True
    if t is Not:
        return _future_ok(phi.child, protected)
    if t in (And, Or):
        return _future_ok(phi.left, protected) and _future_ok(phi.right, protected)
    if t is First:
        return _future_ok(phi.left, True) and _future_ok(phi.right, protected)
    if t is Last:
        return protected and _future_ok(phi.left, True) and _future_ok(phi.right, True)
    if t is Atom:
        return protected or phi.modality.kind == "G"
    return False
