"""Rankers: sequences of "go to the next/previous a-position" instructions.

A step either jumps to a unique position of the word or is undefined.  The
eager flavour fails as soon as a target would lie "at infinity"; the lazy
flavour may rest at the single infinite position INF and defer failure until a
letter with finitely many occurrences is requested.

Undefined is modelled as the value ``None``, never as an exception: the set of
words on which a ranker is defined is the central object here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import INF, START, Position, Word, alphabet_of, imaginary_of

__all__ = [
    "Step",
    "AtomicModality",
    "Ranker",
    "X", "Y", "XL", "YL", "G", "H", "GL", "HL",
    "ranker",
    "step_eval",
    "atom_step",
    "atom_holds",
    "eval_from",
    "eval_outside",
    "defined_on",
    "alph_gamma",
    "classify",
    "is_future_step",
    "is_future_atom",
    "reflavor",
]


@dataclass(frozen=True, slots=True)
class Step:
    """One instruction: ``dir`` is 'X' (next) or 'Y' (yesterday)."""

    dir: str
    letter: str
    lazy: bool = False

    def __post_init__(self):
        if self.dir not in ("X", "Y"):
            raise ValueError(f"step direction must be 'X' or 'Y', got {self.dir!r}")
        if len(self.letter) != 1:
            raise ValueError(f"letters are single characters, got {self.letter!r}")


@dataclass(frozen=True, slots=True)
class AtomicModality:
    """A trailing test: ``kind`` 'G' = globally-no-letter, 'H' = historically-no-letter."""

    kind: str
    letter: str
    lazy: bool = False

    def __post_init__(self):
        if self.kind not in ("G", "H"):
            raise ValueError(f"atomic modality kind must be 'G' or 'H', got {self.kind!r}")
        if len(self.letter) != 1:
            raise ValueError(f"letters are single characters, got {self.letter!r}")


def X(a: str) -> Step:
    return Step("X", a, False)


def Y(a: str) -> Step:
    return Step("Y", a, False)


def XL(a: str) -> Step:
    return Step("X", a, True)


def YL(a: str) -> Step:
    return Step("Y", a, True)


def G(a: str) -> AtomicModality:
    return AtomicModality("G", a, False)


def H(a: str) -> AtomicModality:
    return AtomicModality("H", a, False)


def GL(a: str) -> AtomicModality:
    return AtomicModality("G", a, True)


def HL(a: str) -> AtomicModality:
    return AtomicModality("H", a, True)


@dataclass(frozen=True, slots=True)
class Ranker:
    """A flavour-consistent sequence of steps, optionally capped by one atomic modality."""

    steps: tuple = ()
    tail: AtomicModality | None = None

    def __post_init__(self):
        flavors = {s.lazy for s in self.steps}
        if self.tail is not None:
            flavors.add(self.tail.lazy)
        if len(flavors) > 1:
            raise ValueError("ranker mixes eager and lazy modalities")

    @property
    def is_empty(self) -> bool:
        return not self.steps and self.tail is None

    @property
    def lazy(self) -> bool:
        if self.steps:
            return self.steps[0].lazy
        if self.tail is not None:
            return self.tail.lazy
        return False

    def modality_count(self) -> int:
        return len(self.steps) + (1 if self.tail is not None else 0)


def ranker(*mods) -> Ranker:
    """Build a ranker from Step values with an optional trailing AtomicModality."""
    if mods and isinstance(mods[-1], AtomicModality):
        return Ranker(tuple(mods[:-1]), mods[-1])
    return Ranker(tuple(mods), None)


def step_eval(w: Word, s: Step, p: Position) -> Position | None:
    """One step of ranker evaluation; ``None`` means undefined.

    Eager next: least letter-position > p, undefined at INF.
    Eager yesterday: greatest letter-position < p; at INF defined only when the
    letter occurs finitely often (and at least once).
    Lazy steps agree with eager ones at finite positions; at INF they stay at
    INF whenever the letter occurs infinitely often, and lazy yesterday falls
    back to the last occurrence when there are finitely many.
    """
    a = s.letter
    if s.dir == "X":
        if p is INF:
            if s.lazy and a in imaginary_of(w):
                return INF
            return None
        return w.next_occurrence(a, p)
    if p is INF:
        if s.lazy and a in imaginary_of(w):
            return INF
        return w.last_occurrence(a)
    if p == START:
        return None
    return w.prev_occurrence(a, p)


def atom_step(m: AtomicModality) -> Step:
    """The step whose undefinedness the atomic modality asserts."""
    return Step("X" if m.kind == "G" else "Y", m.letter, m.lazy)


def atom_holds(w: Word, m: AtomicModality, p: Position) -> bool:
    """Globally-no / historically-no test at a position."""
    return step_eval(w, atom_step(m), p) is None


def eval_from(w: Word, r: Ranker, p: Position) -> Position | None:
    """Fold the steps left to right from ``p``; check the tail at the end.

    Returns the position after the last step (the start position for a lone
    atomic modality), or None as soon as a step is undefined or the tail fails.
    """
    pos: Position | None = p
    for s in r.steps:
        pos = step_eval(w, s, pos)
        if pos is None:
            return None
    if r.tail is not None and not atom_holds(w, r.tail, pos):
        return None
    return pos


def is_future_step(s: Step) -> bool:
    return s.dir == "X"


def is_future_atom(m: AtomicModality) -> bool:
    return m.kind == "G"


def _first_is_future(r: Ranker) -> bool:
    if r.steps:
        return is_future_step(r.steps[0])
    if r.tail is not None:
        return is_future_atom(r.tail)
    raise ValueError("empty ranker has no anchor")


def eval_outside(w: Word, r: Ranker) -> Position | None:
    """Evaluate from outside the word: START for future-rooted rankers, INF for past-rooted."""
    anchor = START if _first_is_future(r) else INF
    return eval_from(w, r, anchor)


def defined_on(w: Word, r: Ranker) -> bool:
    """Membership of ``w`` in the ranker's language; the empty ranker is defined everywhere."""
    if r.is_empty:
        return True
    return eval_outside(w, r) is not None


def alph_gamma(r: Ranker) -> frozenset:
    """Letters occurring in some modality of the ranker."""
    letters = {s.letter for s in r.steps}
    if r.tail is not None:
        letters.add(r.tail.letter)
    return frozenset(letters)


def classify(r: Ranker) -> tuple:
    """('X'|'Y', 'eager'|'lazy') by the first modality and the shared flavour."""
    root = "X" if _first_is_future(r) else "Y"
    return root, ("lazy" if r.lazy else "eager")


def reflavor(r: Ranker, lazy: bool) -> Ranker:
    """The same ranker with every modality switched to the given flavour."""
    steps = tuple(Step(s.dir, s.letter, lazy) for s in r.steps)
    tail = None if r.tail is None else AtomicModality(r.tail.kind, r.tail.letter, lazy)
    return Ranker(steps, tail)
