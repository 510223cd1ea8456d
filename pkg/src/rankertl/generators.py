"""Deterministic enumeration of rankers, formulas and monomials for the check suites."""

from __future__ import annotations

from itertools import product
from random import Random

from .formulas import And, Atom, Not, Or, TOP
from .itl import First, Last
from .monomials import Monomial
from .rankers import AtomicModality, Ranker, Step
from .tl import Mod

__all__ = [
    "step_rankers",
    "extended_rankers",
    "tl_formulas_upto",
    "itl_formulas_upto",
    "random_itl_formulas",
    "all_monomials",
]


def step_rankers(letters, max_len: int, lazy: bool = False, first_dir: str | None = None):
    """All tail-free rankers with 1..max_len steps, optionally pinned to a first direction."""
    letters = sorted(letters)
    dirs = ("X", "Y")
    out = []
    for n in range(1, max_len + 1):
        for combo in product(*( [(d, a) for d in dirs for a in letters] for _ in range(n) )):
            if first_dir is not None and combo[0][0] != first_dir:
                continue
            out.append(Ranker(tuple(Step(d, a, lazy) for d, a in combo), None))
    return out


def extended_rankers(letters, max_modalities: int, lazy: bool = False, include_lone_h: bool = False):
    """All rankers with 1..max_modalities modalities counting an optional trailing atom."""
    letters = sorted(letters)
    out = []
    for atom_kind in ("G", "H"):
        for a in letters:
            if atom_kind == "H" and not include_lone_h:
                continue
            out.append(Ranker((), AtomicModality(atom_kind, a, lazy)))
    for steps_len in range(1, max_modalities + 1):
        for r in step_rankers(letters, steps_len, lazy):
            if len(r.steps) != steps_len:
                continue
            out.append(r)
            if steps_len < max_modalities:
                for atom_kind in ("G", "H"):
                    for a in letters:
                        out.append(Ranker(r.steps, AtomicModality(atom_kind, a, lazy)))
    return out


def tl_formulas_upto(letters, max_size: int, lazy: bool):
    """All point formulas of each tree size up to the bound, over truth, negation,
    conjunction, disjunction and the step modalities; sub-objects are shared."""
    letters = sorted(letters)
    steps = [Step(d, a, lazy) for d in ("X", "Y") for a in letters]
    by_size: list[list] = [[], [TOP]]
    for n in range(2, max_size + 1):
        layer = []
        for phi in by_size[n - 1]:
            layer.append(Not(phi))
            for s in steps:
                layer.append(Mod(s, phi))
        for ln in range(1, n - 1):
            rn = n - 1 - ln
            for lhs in by_size[ln]:
                for rhs in by_size[rn]:
                    layer.append(And(lhs, rhs))
                    layer.append(Or(lhs, rhs))
        by_size.append(layer)
    return [phi for layer in by_size[1:] for phi in layer]


def _itl_leaves(letters, lazy: bool):
    leaves = [TOP]
    for kind in ("G", "H"):
        for a in sorted(letters):
            leaves.append(Atom(AtomicModality(kind, a, lazy)))
    return leaves


def itl_formulas_upto(letters, max_size: int, lazy: bool):
    """All interval formulas up to the size bound over truth, the atoms, negation,
    conjunction, disjunction and the first/last modalities."""
    letters = sorted(letters)
    by_size: list[list] = [[], _itl_leaves(letters, lazy)]
    for n in range(2, max_size + 1):
        layer = [Not(phi) for phi in by_size[n - 1]]
        for ln in range(1, n - 1):
            rn = n - 1 - ln
            for lhs in by_size[ln]:
                for rhs in by_size[rn]:
                    layer.append(And(lhs, rhs))
                    layer.append(Or(lhs, rhs))
                    for a in letters:
                        layer.append(First(a, lhs, rhs, lazy))
                        layer.append(Last(a, lhs, rhs, lazy))
        by_size.append(layer)
    return [phi for layer in by_size[1:] for phi in layer]


def random_itl_formulas(letters, sizes, count_per_size: int, lazy: bool, seed: int):
    """Random interval formulas of exact tree sizes, reproducible from the seed."""
    rng = Random(seed)
    letters = sorted(letters)
    leaves = _itl_leaves(letters, lazy)

    def gen(size: int):
        if size == 1:
            return rng.choice(leaves)
        if size == 2 or (size > 2 and rng.random() < 0.2):
            return Not(gen(size - 1))
        ln = rng.randint(1, size - 2)
        lhs, rhs = gen(ln), gen(size - 1 - ln)
        roll = rng.random()
        if roll < 0.25:
            return And(lhs, rhs)
        if roll < 0.5:
            return Or(lhs, rhs)
        a = rng.choice(letters)
        if roll < 0.75:
            return First(a, lhs, rhs, lazy)
        return Last(a, lhs, rhs, lazy)

    return [gen(size) for size in sizes for _ in range(count_per_size)]


def all_monomials(letters, max_degree: int):
    """Every monomial up to the degree bound, letter sets ranging over the whole
    powerset, in a fixed order."""
    letters = sorted(letters)
    subsets = []
    for mask in range(1 << len(letters)):
        subsets.append(frozenset(a for i, a in enumerate(letters) if mask >> i & 1))
    out = []
    for k in range(max_degree + 1):
        blocks_choices = product(*([[(A, a) for A in subsets for a in letters]] * k))
        for blocks in blocks_choices:
            for tail in subsets:
                out.append(Monomial(tuple(blocks), tail))
    return out
