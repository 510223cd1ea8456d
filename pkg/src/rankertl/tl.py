"""Unambiguous temporal logic: point semantics over positions and the model relation.

A modal node ``Mod(Z, phi)`` holds at a position iff the step ``Z`` is defined
there and ``phi`` holds at the position it determines.  The atomic formulas
are the globally-no / historically-no tests, equivalent to the undefinedness
of the corresponding step.

The top-level model relation distributes through Boolean connectives and then
anchors each modal subtree on its own: future-rooted subtrees at START,
past-rooted ones at INF.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .formulas import And, Atom, Bottom, Not, Or, Top
from .rankers import (
    Ranker,
    Step,
    atom_holds,
    is_future_atom,
    is_future_step,
    step_eval,
)
from .words import INF, START, Position, Word

__all__ = [
    "Mod",
    "mod_chain",
    "ranker_formula",
    "eval_at",
    "models",
    "TLFragmentSpec",
    "tl_spec",
    "check_fragment",
]


@dataclass(frozen=True, slots=True)
class Mod:
    step: Step
    child: object


def mod_chain(steps, phi):
    """Prefix a sequence of steps onto a formula."""
    for s in reversed(steps):
        phi = Mod(s, phi)
    return phi


def ranker_formula(r: Ranker):
    """The formula whose top-level truth coincides with definedness of the ranker."""
    base = Atom(r.tail) if r.tail is not None else Top()
    return mod_chain(r.steps, base)


def eval_at(w: Word, phi, p: Position, memo: dict | None = None) -> bool:
    """Truth of ``phi`` at position ``p`` of ``w``."""
    if memo is None:
        memo = {}
    return _eval(w, phi, p, memo)


def _eval(w, phi, p, memo) -> bool:
    t = type(phi)
    if t is Top:
        return True
    if t is Bottom:
        return False
    key = (id(phi), p)
    hit = memo.get(key)
    if hit is not None:
        return hit is True
    if t is Mod:
        q = step_eval(w, phi.step, p)
        out = q is not None and _eval(w, phi.child, q, memo)
    elif t is Atom:
        out = atom_holds(w, phi.modality, p)
    elif t is Not:
        out = not _eval(w, phi.child, p, memo)
    elif t is And:
        out = _eval(w, phi.left, p, memo) and _eval(w, phi.right, p, memo)
    elif t is Or:
        out = _eval(w, phi.left, p, memo) or _eval(w, phi.right, p, memo)
    else:
        raise ValueError(f"not a temporal-logic node: {phi!r}")
    memo[key] = out
    return out


def models(w: Word, phi, memo: dict | None = None) -> bool:
    """Top-level satisfaction of a formula by a word."""
    if memo is None:
        memo = {}
    t = type(phi)
    if t is Top:
        return True
    if t is Bottom:
        return False
    if t is Not:
        return not models(w, phi.child, memo)
    if t is And:
        return models(w, phi.left, memo) and models(w, phi.right, memo)
    if t is Or:
        return models(w, phi.left, memo) or models(w, phi.right, memo)
    if t is Mod:
        anchor = START if is_future_step(phi.step) else INF
        return _eval(w, phi, anchor, memo)
    if t is Atom:
        anchor = START if is_future_atom(phi.modality) else INF
        return _eval(w, phi, anchor, memo)
    raise ValueError(f"not a temporal-logic node: {phi!r}")


@dataclass(frozen=True)
class TLFragmentSpec:
    """Fragment description: allowed (kind, lazy) modality pairs plus structural flags.

    Kinds are 'X', 'Y' for steps and 'G', 'H' for atomic modalities.
    """

    allowed: frozenset
    positive: bool = False
    future_rooted: bool = False


_TOKEN_KINDS = {"X": ("X", False), "Y": ("Y", False), "G": ("G", False), "H": ("H", False),
                "XL": ("X", True), "YL": ("Y", True), "GL": ("G", True), "HL": ("H", True)}


def tl_spec(*tokens, positive: bool = False, future_rooted: bool = False) -> TLFragmentSpec:
    """Convenience constructor from tokens like 'X', 'YL', 'G', 'HL'."""
    return TLFragmentSpec(frozenset(_TOKEN_KINDS[t] for t in tokens), positive, future_rooted)


def _modalities_allowed(phi, allowed) -> bool:
    t = type(phi)
    if t in (Top, Bottom):
        return True
    if t is Not:
        return _modalities_allowed(phi.child, allowed)
    if t in (And, Or):
        return _modalities_allowed(phi.left, allowed) and _modalities_allowed(phi.right, allowed)
    if t is Mod:
        return (phi.step.dir, phi.step.lazy) in allowed and _modalities_allowed(phi.child, allowed)
    if t is Atom:
        return (phi.modality.kind, phi.modality.lazy) in allowed
    return False


def _is_positive(phi) -> bool:
    t = type(phi)
    if t in (Not, Bottom):
        return False
    if t in (And, Or):
        return _is_positive(phi.left) and _is_positive(phi.right)
    if t is Mod:
        return _is_positive(phi.child)
    return True


def _future_rooted(phi) -> bool:
    # the first modal node through Boolean connectives must be a future modality
    t = type(phi)
    if t in (Top, Bottom):
        return True
    if t is Not:
        return _future_rooted(phi.child)
    if t in (And, Or):
        return _future_rooted(phi.left) and _future_rooted(phi.right)
    if t is Mod:
        return is_future_step(phi.step)
    if t is Atom:
        return is_future_atom(phi.modality)
    return False


def check_fragment(phi, spec: TLFragmentSpec) -> bool:
    """Syntactic membership of a formula in a fragment."""
    if not _modalities_allowed(phi, spec.allowed):
        return False
    if spec.positive and not _is_positive(phi):
        return False
    if spec.future_rooted and not _future_rooted(phi):
        return False
    return True
