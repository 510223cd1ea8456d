"""Shared Boolean skeleton for the formula ASTs (point, interval and first-order).

``Bottom`` is an internal constant: constructions introduce it as the unit of
empty disjunctions and constant folding removes it again unless the whole
formula is equivalent to falsity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rankers import AtomicModality

__all__ = [
    "Top", "Bottom", "Not", "And", "Or", "Atom",
    "TOP", "BOTTOM",
    "neg", "conj", "disj", "conj_all", "disj_all",
    "children", "walk", "tree_size",
]


@dataclass(frozen=True, slots=True)
class Top:
    pass


@dataclass(frozen=True, slots=True)
class Bottom:
    pass


@dataclass(frozen=True, slots=True)
class Not:
    child: object


@dataclass(frozen=True, slots=True)
class And:
    left: object
    right: object


@dataclass(frozen=True, slots=True)
class Or:
    left: object
    right: object


@dataclass(frozen=True, slots=True)
class Atom:
    """A globally-no / historically-no test used as an atomic formula."""

    modality: AtomicModality


TOP = Top()
BOTTOM = Bottom()


def neg(phi):
    """Negation with constant folding."""
    if isinstance(phi, Top):
        return BOTTOM
    if isinstance(phi, Bottom):
        return TOP
    return Not(phi)


def conj(a, b):
    """Conjunction with constant folding and collapse of identical operands."""
    if isinstance(a, Bottom) or isinstance(b, Bottom):
        return BOTTOM
    if isinstance(a, Top):
        return b
    if isinstance(b, Top) or a is b:
        return a
    return And(a, b)


def disj(a, b):
    if isinstance(a, Top) or isinstance(b, Top):
        return TOP
    if isinstance(a, Bottom):
        return b
    if isinstance(b, Bottom) or a is b:
        return a
    return Or(a, b)


def conj_all(parts):
    out = TOP
    for p in parts:
        out = conj(out, p)
    return out


def disj_all(parts):
    out = BOTTOM
    for p in parts:
        out = disj(out, p)
    return out


def children(node) -> tuple:
    """Immediate sub-nodes, duck-typed over all AST families."""
    if isinstance(node, Not):
        return (node.child,)
    if isinstance(node, (And, Or)):
        return (node.left, node.right)
    if hasattr(node, "child"):
        return (node.child,)
    if hasattr(node, "body"):
        return (node.body,)
    if hasattr(node, "left"):
        return (node.left, node.right)
    return ()


def walk(node):
    """All nodes of the DAG, each object once."""
    seen = set()
    stack = [node]
    while stack:
        n = stack.pop()
        if id(n) in seen:
            continue
        seen.add(id(n))
        yield n
        stack.extend(children(n))


def tree_size(node) -> int:
    """Node count of the formula as a tree (shared sub-objects counted per occurrence)."""
    return 1 + sum(tree_size(c) for c in children(node))
