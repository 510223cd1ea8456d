"""First-order logic over finite words: labelled linear orders, Tarskian evaluation,
and the syntactic shape checks (variable-name count, exists-forall prenex shape).

Negated label atoms are primitive so that positively built formulas stay in
negation normal form; plain negation remains available.  Evaluation is
restricted to finite words: variables range over the positions 1..|w|.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formulas import And, Bottom, Not, Or, Top
from .words import Word

__all__ = [
    "Label",
    "NotLabel",
    "Less",
    "Leq",
    "Exists",
    "Forall",
    "fo_eval",
    "count_variable_names",
    "is_sigma2_shape",
    "rename_variables",
]


@dataclass(frozen=True, slots=True)
class Label:
    var: str
    letter: str


@dataclass(frozen=True, slots=True)
class NotLabel:
    var: str
    letter: str


@dataclass(frozen=True, slots=True)
class Less:
    lhs: str
    rhs: str


@dataclass(frozen=True, slots=True)
class Leq:
    lhs: str
    rhs: str


@dataclass(frozen=True, slots=True)
class Exists:
    var: str
    body: object


@dataclass(frozen=True, slots=True)
class Forall:
    var: str
    body: object


def fo_eval(w: Word, phi, env: dict | None = None) -> bool:
    """Standard semantics over the positions of a finite word."""
    if not w.is_finite:
        raise ValueError("FO evaluation restricted to finite words")
    n = len(w.prefix)
    env = dict(env) if env else {}

    def ev(node, env):
        t = type(node)
        if t is Top:
            return True
        if t is Bottom:
            return False
        if t is Label:
            return w.prefix[_lookup(node.var, env) - 1] == node.letter
        if t is NotLabel:
            return w.prefix[_lookup(node.var, env) - 1] != node.letter
        if t is Less:
            return _lookup(node.lhs, env) < _lookup(node.rhs, env)
        if t is Leq:
            return _lookup(node.lhs, env) <= _lookup(node.rhs, env)
        if t is Not:
            return not ev(node.child, env)
        if t is And:
            return ev(node.left, env) and ev(node.right, env)
        if t is Or:
            return ev(node.left, env) or ev(node.right, env)
        if t is Exists:
            return any(ev(node.body, {**env, node.var: p}) for p in range(1, n + 1))
        if t is Forall:
            return all(ev(node.body, {**env, node.var: p}) for p in range(1, n + 1))
        raise ValueError(f"not a first-order node: {node!r}")

    return ev(phi, env)


def _lookup(var: str, env: dict) -> int:
    try:
        return env[var]
    except KeyError:
        raise ValueError(f"unbound variable {var}") from None


def count_variable_names(phi) -> int:
    """Number of distinct variable names occurring anywhere in the formula."""
    names = set()

    def scan(node):
        t = type(node)
        if t in (Label, NotLabel):
            names.add(node.var)
        elif t in (Less, Leq):
            names.add(node.lhs)
            names.add(node.rhs)
        elif t in (Exists, Forall):
            names.add(node.var)
            scan(node.body)
        elif t is Not:
            scan(node.child)
        elif t in (And, Or):
            scan(node.left)
            scan(node.right)

    scan(phi)
    return len(names)


def is_sigma2_shape(phi) -> bool:
    """True iff the formula is exists* forall* applied to a quantifier-free matrix."""
    while type(phi) is Exists:
        phi = phi.body
    while type(phi) is Forall:
        phi = phi.body
    return _quantifier_free(phi)


def _quantifier_free(phi) -> bool:
    t = type(phi)
    if t in (Exists, Forall):
        return False
    if t is Not:
        return _quantifier_free(phi.child)
    if t in (And, Or):
        return _quantifier_free(phi.left) and _quantifier_free(phi.right)
    return True


def rename_variables(phi, mapping: dict):
    """Rename variable names everywhere, bound occurrences included."""
    t = type(phi)
    if t is Label:
        return Label(mapping.get(phi.var, phi.var), phi.letter)
    if t is NotLabel:
        return NotLabel(mapping.get(phi.var, phi.var), phi.letter)
    if t is Less:
        return Less(mapping.get(phi.lhs, phi.lhs), mapping.get(phi.rhs, phi.rhs))
    if t is Leq:
        return Leq(mapping.get(phi.lhs, phi.lhs), mapping.get(phi.rhs, phi.rhs))
    if t is Not:
        return Not(rename_variables(phi.child, mapping))
    if t is And:
        return And(rename_variables(phi.left, mapping), rename_variables(phi.right, mapping))
    if t is Or:
        return Or(rename_variables(phi.left, mapping), rename_variables(phi.right, mapping))
    if t is Exists:
        return Exists(mapping.get(phi.var, phi.var), rename_variables(phi.body, mapping))
    if t is Forall:
        return Forall(mapping.get(phi.var, phi.var), rename_variables(phi.body, mapping))
    return phi
