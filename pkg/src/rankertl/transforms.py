"""Constructive translations between rankers, point formulas, interval formulas,
monomials and first-order formulas, plus the shared simplifier.

Every translation is a total function on its stated input class and is
validated against the differential-testing oracle; the syntactic guarantees
(positivity, which atoms may appear, future-rootedness, prenex shape) are part
of each function's contract and are checked by the fragment predicates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formulas import (
    And,
    Atom,
    Bottom,
    Not,
    Or,
    Top,
    TOP,
    BOTTOM,
    conj,
    conj_all,
    disj,
    disj_all,
    neg,
    walk,
)
from .fo import Exists, Forall, Label, Leq, Less, NotLabel, rename_variables
from .itl import First, Last
from .monomials import (
    AmbiguityWitness,
    Monomial,
    check_unambiguous_bounded,
    delta2_condition,
    restrict,
)
from .rankers import (
    AtomicModality,
    G,
    GL,
    H,
    HL,
    Ranker,
    Step,
    X,
    XL,
    Y,
    YL,
    atom_step,
    classify,
    defined_on,
)
from .tl import Mod, mod_chain
from .words import Word

__all__ = [
    "simplify",
    "Boundary",
    "BEGIN",
    "END",
    "AmbiguousMonomialError",
    "lemma1_tl_to_rankers",
    "language_accepts",
    "language_leaves",
    "language_positive",
    "lemma2_rho",
    "lemma2_theta",
    "lemma3_rho",
    "lemma3_theta",
    "prop1_relativize",
    "prop2_relativize",
    "lemma4_formulas",
    "lemma5_monomial_to_itl",
    "lemma8_monomial_to_future_itl",
    "lemma9_complement_to_lazy_itl",
    "lemma6_mu",
    "lemma6_sigma",
    "lemma6_sigma_var",
    "lemma7_xranker_complement",
    "thm5_negation_elimination",
    "thm5_lazy_ranker_to_tl",
    "thm5_complement_Aim",
]


class AmbiguousMonomialError(ValueError):
    """Raised when a construction requires an unambiguous monomial; carries the witness."""

    def __init__(self, witness: Word):
        super().__init__(f"monomial is ambiguous, witness {witness!r}")
        self.witness = witness


# -- simplifier --------------------------------------------------------------


def _mk_mod(step, child):
    return BOTTOM if isinstance(child, Bottom) else Mod(step, child)


def simplify(phi):
    """Constant folding on point and interval formulas; semantics preserved at
    every word and position/interval.  Falsity survives only when the whole
    formula is equivalent to it."""
    memo: dict = {}

    def rec(node):
        hit = memo.get(id(node))
        if hit is not None:
            return hit
        t = type(node)
        if t in (Top, Bottom, Atom):
            out = node
        elif t is Not:
            out = neg(rec(node.child))
        elif t is And:
            out = conj(rec(node.left), rec(node.right))
        elif t is Or:
            out = disj(rec(node.left), rec(node.right))
        elif t is Mod:
            out = _mk_mod(node.step, rec(node.child))
        elif t in (First, Last):
            left, right = rec(node.left), rec(node.right)
            if isinstance(left, Bottom) or isinstance(right, Bottom):
                out = BOTTOM
            else:
                out = t(node.letter, left, right, node.lazy)
        else:
            raise ValueError(f"cannot simplify node {node!r}")
        memo[id(node)] = out
        return out

    return rec(phi)


# -- validation helpers -------------------------------------------------------


def _validate_tl(phi, lazy: bool | None = None, what: str = "formula"):
    for node in walk(phi):
        t = type(node)
        if t in (First, Last):
            raise ValueError(f"{what} contains an interval node: {node!r}")
        if t is Mod and lazy is not None and node.step.lazy is not lazy:
            raise ValueError(f"{what} contains a {'lazy' if node.step.lazy else 'eager'} modality")
        if t is Atom and lazy is not None and node.modality.lazy is not lazy:
            raise ValueError(f"{what} contains a {'lazy' if node.modality.lazy else 'eager'} modality")


def _validate_itl(phi, lazy: bool, what: str = "formula"):
    for node in walk(phi):
        t = type(node)
        if t is Mod:
            raise ValueError(f"{what} contains a point-logic node: {node!r}")
        if t in (First, Last) and node.lazy is not lazy:
            raise ValueError(f"{what} contains a {'lazy' if node.lazy else 'eager'} modality")
        if t is Atom and node.modality.lazy is not lazy:
            raise ValueError(f"{what} contains a {'lazy' if node.modality.lazy else 'eager'} modality")


# -- ranker languages (Lemma 1) ----------------------------------------------


def lemma1_tl_to_rankers(phi):
    """Move all Boolean connectives of a point formula to the outermost level,
    yielding a Boolean combination whose leaves are rankers.

    Positive input gives positive output; a historically-no leaf appears only
    if the input used one; future-rooted input gives future-rooted leaves.
    """
    _validate_tl(phi)
    phi = simplify(phi)
    conv_memo: dict = {}
    push_memo: dict = {}

    def push(step, node):
        key = (step, id(node))
        hit = push_memo.get(key)
        if hit is not None:
            return hit
        if isinstance(node, Ranker):
            out = Ranker((step,) + node.steps, node.tail)
        elif isinstance(node, And):
            out = And(push(step, node.left), push(step, node.right))
        elif isinstance(node, Or):
            out = Or(push(step, node.left), push(step, node.right))
        elif isinstance(node, Not):
            out = And(Ranker((step,), None), Not(push(step, node.child)))
        else:
            raise ValueError(f"unexpected ranker-language node {node!r}")
        push_memo[key] = out
        return out

    def conv(node):
        hit = conv_memo.get(id(node))
        if hit is not None:
            return hit
        t = type(node)
        if t is Top:
            out = Ranker((), None)
        elif t is Bottom:
            out = Not(Ranker((), None))
        elif t is Atom:
            out = Ranker((), node.modality)
        elif t is Mod:
            out = push(node.step, conv(node.child))
        elif t is Not:
            out = Not(conv(node.child))
        elif t is And:
            out = And(conv(node.left), conv(node.right))
        elif t is Or:
            out = Or(conv(node.left), conv(node.right))
        else:
            raise ValueError(f"not a point-logic node: {node!r}")
        conv_memo[id(node)] = out
        return out

    return conv(phi)


def language_accepts(w: Word, lang, memo: dict | None = None) -> bool:
    """Membership of a word in a ranker language (Boolean tree over ranker leaves)."""
    if memo is None:
        memo = {}
    t = type(lang)
    if t is Ranker:
        key = id(lang)
        hit = memo.get(key)
        if hit is None:
            hit = memo[key] = defined_on(w, lang)
        return hit
    if t is Not:
        return not language_accepts(w, lang.child, memo)
    if t is And:
        return language_accepts(w, lang.left, memo) and language_accepts(w, lang.right, memo)
    if t is Or:
        return language_accepts(w, lang.left, memo) or language_accepts(w, lang.right, memo)
    if t is Top:
        return True
    if t is Bottom:
        return False
    raise ValueError(f"not a ranker-language node: {lang!r}")


def language_leaves(lang):
    """The distinct ranker leaves of a ranker language."""
    return [n for n in walk(lang) if isinstance(n, Ranker)]


def language_positive(lang) -> bool:
    return not any(isinstance(n, (Not, Bottom)) for n in walk(lang))


# -- order formulas for ranker positions (Lemmas 2 and 3) ---------------------


def _lemma2_pair(r: Ranker):
    rho, theta = TOP, BOTTOM
    for s in r.steps:
        a = s.letter
        if s.dir == "X":
            rho = Mod(Y(a), rho)
            theta = disj(Atom(G(a)), _mk_mod(X(a), rho))
        else:
            theta = disj(Atom(G(a)), _mk_mod(X(a), theta))
            rho = _mk_mod(Y(a), theta)
    return rho, theta


def _require_plain(r: Ranker, lazy: bool, name: str):
    if not r.steps:
        raise ValueError(f"{name} needs a non-empty ranker")
    if r.tail is not None:
        raise ValueError(f"{name} does not accept a trailing atomic modality")
    if r.lazy is not lazy:
        raise ValueError(f"{name} needs {'a lazy' if lazy else 'an eager'} ranker")


def lemma2_rho(r: Ranker):
    """Formula true at x iff x > r-position, on words where the eager ranker is defined."""
    _require_plain(r, False, "lemma2")
    return simplify(_lemma2_pair(r)[0])


def lemma2_theta(r: Ranker):
    """Formula true at x iff x >= r-position, on words where the eager ranker is defined."""
    _require_plain(r, False, "lemma2")
    return simplify(_lemma2_pair(r)[1])


def _lemma3_pair(r: Ranker):
    rho, theta = TOP, BOTTOM
    for s in r.steps:
        a = s.letter
        if s.dir == "X":
            theta = disj(Atom(HL(a)), _mk_mod(YL(a), theta))
            rho = _mk_mod(XL(a), theta)
        else:
            rho = _mk_mod(XL(a), rho)
            theta = disj(Atom(HL(a)), _mk_mod(YL(a), rho))
    return rho, theta


def lemma3_rho(r: Ranker):
    """Formula true at x iff x < r-position (with INF < INF), where the lazy ranker is defined."""
    _require_plain(r, True, "lemma3")
    return simplify(_lemma3_pair(r)[0])


def lemma3_theta(r: Ranker):
    """Formula true at x iff x <= r-position (with INF <= INF), where the lazy ranker is defined."""
    _require_plain(r, True, "lemma3")
    return simplify(_lemma3_pair(r)[1])


# -- interval-to-point relativization (Propositions 1 and 2) ------------------


@dataclass(frozen=True, slots=True)
class Boundary:
    """An interval boundary: the front anchor, the back anchor, or a ranker.

    Begin materialises "position 0" and End "position INF"; composing either
    with a formula is the identity, while a ranker boundary prefixes its steps.
    """

    kind: str
    steps: tuple = ()

    @property
    def is_begin(self) -> bool:
        return self.kind == "begin"

    @property
    def is_end(self) -> bool:
        return self.kind == "end"

    def extend(self, step: Step) -> "Boundary":
        return Boundary("ranker", self.steps + (step,))

    def apply(self, phi):
        return mod_chain(self.steps, phi)

    def defined(self):
        return mod_chain(self.steps, TOP)

    def x_rooted(self) -> bool:
        return bool(self.steps) and self.steps[0].dir == "X"


BEGIN = Boundary("begin")
END = Boundary("end")


def _validate_boundary(b: Boundary, lazy: bool):
    if b.kind == "ranker" and not b.steps:
        raise ValueError("ranker boundary must be non-empty")
    for s in b.steps:
        if s.lazy is not lazy:
            raise ValueError(f"boundary flavour mismatch: {s!r}")


def prop1_relativize(phi, q: Boundary = BEGIN, r: Boundary = END):
    """Translate an eager interval formula on the boundary interval (q; r) into a
    point formula; negation count and historically-no atoms come only from the input.

    Where the right boundary is End, the conjunct expressing "left end < right
    end" degenerates to truth: a defined non-empty eager ranker position is
    finite, hence below INF.
    """
    _validate_itl(phi, lazy=False, what="interval formula")
    _validate_boundary(q, lazy=False)
    _validate_boundary(r, lazy=False)
    pair_memo: dict = {}
    def_memo: dict = {}
    top_memo: dict = {}
    rel_memo: dict = {}

    def pieces(b: Boundary):
        hit = pair_memo.get(b)
        if hit is None:
            hit = pair_memo[b] = _lemma2_pair(Ranker(b.steps))
        return hit

    def rho(b: Boundary):
        return TOP if b.is_begin else pieces(b)[0]

    def theta(b: Boundary):
        return pieces(b)[1]

    def bdef(b: Boundary):
        hit = def_memo.get(b)
        if hit is None:
            hit = def_memo[b] = b.defined()
        return hit

    def bapply(b: Boundary, phi):
        return bdef(b) if phi is TOP else b.apply(phi)

    def top(q, r):
        key = (q, r)
        hit = top_memo.get(key)
        if hit is None:
            if r.is_end:
                hit = bdef(q)
            else:
                hit = conj(conj(bdef(q), bdef(r)), bapply(r, rho(q)))
            top_memo[key] = hit
        return hit

    def rel(node, q, r):
        key = (id(node), q, r)
        hit = rel_memo.get(key)
        if hit is not None:
            return hit
        t = type(node)
        if t is Top:
            out = top(q, r)
        elif t is Bottom:
            out = BOTTOM
        elif t is Not:
            out = conj(top(q, r), neg(rel(node.child, q, r)))
        elif t is And:
            out = conj(rel(node.left, q, r), rel(node.right, q, r))
        elif t is Or:
            out = disj(rel(node.left, q, r), rel(node.right, q, r))
        elif t is Atom:
            a = node.modality.letter
            if node.modality.kind == "H" and r.is_end:
                out = conj(top(q, r), disj(Atom(H(a)), bapply(q, Atom(G(a)))))
            elif r.is_end:
                out = conj(top(q, r), bapply(q, Atom(G(a))))
            else:
                out = conj(top(q, r), bapply(q, disj(Atom(G(a)), _mk_mod(X(a), theta(r)))))
        elif t is First:
            qa = q.extend(X(node.letter))
            out = conj(top(q, r), conj(rel(node.left, q, qa), rel(node.right, qa, r)))
        elif t is Last:
            ra = r.extend(Y(node.letter))
            out = conj(top(q, r), conj(rel(node.left, q, ra), rel(node.right, ra, r)))
        else:
            raise ValueError(f"not an interval-logic node: {node!r}")
        rel_memo[key] = out
        return out

    return simplify(rel(phi, q, r))


def prop2_relativize(phi, q: Boundary = BEGIN, r: Boundary = END):
    """Lazy counterpart of the relativization; goes through the order formulas of
    the lazy flavour and keeps globally-no atoms out of the output unless the
    input used them."""
    _validate_itl(phi, lazy=True, what="interval formula")
    _validate_boundary(q, lazy=True)
    _validate_boundary(r, lazy=True)
    pair_memo: dict = {}
    def_memo: dict = {}
    top_memo: dict = {}
    rel_memo: dict = {}

    def pieces(b: Boundary):
        hit = pair_memo.get(b)
        if hit is None:
            hit = pair_memo[b] = _lemma3_pair(Ranker(b.steps))
        return hit

    def rho(b: Boundary):
        return TOP if b.is_end else pieces(b)[0]

    def theta(b: Boundary):
        return BOTTOM if b.is_begin else pieces(b)[1]

    def bdef(b: Boundary):
        hit = def_memo.get(b)
        if hit is None:
            hit = def_memo[b] = b.defined()
        return hit

    def bapply(b: Boundary, phi):
        return bdef(b) if phi is TOP else b.apply(phi)

    def top(q, r):
        key = (q, r)
        hit = top_memo.get(key)
        if hit is None:
            hit = conj(conj(bdef(q), bdef(r)), bapply(q, rho(r)))
            top_memo[key] = hit
        return hit

    def rel(node, q, r):
        key = (id(node), q, r)
        hit = rel_memo.get(key)
        if hit is not None:
            return hit
        t = type(node)
        if t is Top:
            out = top(q, r)
        elif t is Bottom:
            out = BOTTOM
        elif t is Not:
            out = conj(top(q, r), neg(rel(node.child, q, r)))
        elif t is And:
            out = conj(rel(node.left, q, r), rel(node.right, q, r))
        elif t is Or:
            out = disj(rel(node.left, q, r), rel(node.right, q, r))
        elif t is Atom:
            a = node.modality.letter
            if node.modality.kind == "H":
                if q.is_begin:
                    out = conj(top(q, r), bapply(r, Atom(HL(a))))
                else:
                    out = conj(
                        top(q, r),
                        bapply(r, disj(Atom(HL(a)), _mk_mod(YL(a), theta(q)))),
                    )
            else:
                if r.is_end:
                    out = conj(top(q, r), bapply(q, Atom(GL(a))))
                elif r.x_rooted():
                    out = conj(
                        top(q, r),
                        bapply(r, disj(Atom(HL(a)), _mk_mod(YL(a), theta(q)))),
                    )
                else:
                    letters_of_r = sorted({s.letter for s in r.steps})
                    finite_case = conj(
                        bapply(r, disj(Atom(HL(a)), _mk_mod(YL(a), theta(q)))),
                        disj_all(Mod(YL(b), Atom(GL(b))) for b in letters_of_r),
                    )
                    out = conj(top(q, r), disj(finite_case, bapply(q, Atom(GL(a)))))
        elif t is First:
            qa = q.extend(XL(node.letter))
            out = conj(top(q, r), conj(rel(node.left, q, qa), rel(node.right, qa, r)))
        elif t is Last:
            ra = r.extend(YL(node.letter))
            out = conj(top(q, r), conj(rel(node.left, q, ra), rel(node.right, ra, r)))
        else:
            raise ValueError(f"not an interval-logic node: {node!r}")
        rel_memo[key] = out
        return out

    return simplify(rel(phi, q, r))


# -- monomial constructions (Lemmas 4, 5, 8, 9) --------------------------------


def lemma4_formulas(A: frozenset, alphabet: frozenset):
    """Interval formulas for "only letters of A" and for "every letter of A occurs
    infinitely often"; the second is verified by the oracle to define the
    superset-of-imaginary language, not equality of the imaginary alphabet."""
    ainf = conj_all(Atom(G(b)) for b in sorted(alphabet - A))
    aim = conj_all(conj(First(a, TOP, TOP), Atom(H(a))) for a in sorted(A))
    return ainf, aim


def _gate_unambiguous(m: Monomial, alphabet: frozenset, maxlen: int):
    verdict = check_unambiguous_bounded(m, alphabet, maxlen)
    if isinstance(verdict, AmbiguityWitness):
        raise AmbiguousMonomialError(verdict.word)


def _prefix_mono(m: Monomial, j: int) -> Monomial:
    # blocks 1..j-1 with the j-th letter set as infinite tail
    return Monomial(m.blocks[: j - 1], m.letter_sets()[j - 1])


def _suffix_mono(m: Monomial, j: int) -> Monomial:
    # blocks j..k keeping the original tail
    return Monomial(m.blocks[j - 1 :], m.tail)


def _split_index_first(m: Monomial) -> int | None:
    markers, first = m.markers(), m.blocks[0][0] if m.blocks else frozenset()
    for idx, a in enumerate(markers):
        if a not in first:
            return idx + 1
    return None


def _split_index_last(m: Monomial) -> int | None:
    markers = m.markers()
    for idx in range(len(markers) - 1, -1, -1):
        if markers[idx] not in m.tail:
            return idx + 1
    return None


def lemma5_monomial_to_itl(m: Monomial, alphabet: frozenset, check: bool = True, maxlen: int = 6):
    """Positive eager interval formula defining an unambiguous monomial.

    The split marker is the first one outside the leading letter set when such
    a marker exists, else the last one outside the tail.  Left operands of a
    first-split recurse with the split letter removed from every letter set
    (the part before the first occurrence cannot contain it), which also keeps
    the sub-monomials unambiguous; last-splits restrict the right operands.
    """
    if check:
        _gate_unambiguous(m, alphabet, maxlen)
    return simplify(_l5(m, alphabet, {}))


def _l5(m: Monomial, alph: frozenset, memo: dict):
    hit = memo.get(m)
    if hit is not None:
        return hit
    k = m.degree
    if k == 0:
        out = conj_all(Atom(G(b)) for b in sorted(alph - m.tail))
        memo[m] = out
        return out
    markers, sets = m.markers(), m.letter_sets()
    i = _split_index_first(m)
    if i is not None:
        ai = markers[i - 1]
        disjuncts = []
        for j in range(2, i + 1):
            if ai in sets[j - 1]:
                left = _l5(restrict(_prefix_mono(m, j), ai), alph, memo)
                right = _l5(_suffix_mono(m, j), alph, memo)
                disjuncts.append(First(ai, left, right, False))
        left = _l5(restrict(_prefix_mono(m, i), ai), alph, memo)
        right = _l5(_suffix_mono(m, i + 1), alph, memo)
        disjuncts.append(First(ai, left, right, False))
        out = disj_all(disjuncts)
    else:
        i = _split_index_last(m)
        if i is None:
            raise AmbiguousMonomialError(Word.finite("".join(markers) * 2))
        ai = markers[i - 1]
        disjuncts = [
            Last(
                ai,
                _l5(_prefix_mono(m, i), alph, memo),
                _l5(restrict(_suffix_mono(m, i + 1), ai), alph, memo),
                False,
            )
        ]
        for j in range(i + 1, k + 1):
            if ai in sets[j - 1]:
                disjuncts.append(
                    Last(
                        ai,
                        _l5(_prefix_mono(m, j), alph, memo),
                        _l5(restrict(_suffix_mono(m, j), ai), alph, memo),
                        False,
                    )
                )
        out = disj_all(disjuncts)
    memo[m] = out
    return out


def lemma8_monomial_to_future_itl(m: Monomial, alphabet: frozenset, check: bool = True, maxlen: int = 6):
    """Future interval formula for a monomial whose marker suffixes always escape
    their letter set; recursion always splits at a first-occurrence."""
    if not delta2_condition(m):
        raise ValueError("monomial violates the marker-suffix escape condition")
    if check:
        _gate_unambiguous(m, alphabet, maxlen)
    return simplify(_l8(m, alphabet, {}, {}))


def _l8(m: Monomial, alph: frozenset, memo: dict, l5_memo: dict):
    hit = memo.get(m)
    if hit is not None:
        return hit
    k = m.degree
    if k == 0:
        out = conj_all(Atom(G(b)) for b in sorted(alph - m.tail))
        memo[m] = out
        return out
    markers, sets = m.markers(), m.letter_sets()
    i = _split_index_first(m)
    assert i is not None, "guaranteed by the escape condition at the first block"
    ai = markers[i - 1]
    disjuncts = []
    for j in range(2, i + 1):
        if ai in sets[j - 1]:
            left = _l5(restrict(_prefix_mono(m, j), ai), alph, l5_memo)
            right = _l8(_suffix_mono(m, j), alph, memo, l5_memo)
            disjuncts.append(First(ai, left, right, False))
    left = _l5(restrict(_prefix_mono(m, i), ai), alph, l5_memo)
    right = _l8(_suffix_mono(m, i + 1), alph, memo, l5_memo)
    disjuncts.append(First(ai, left, right, False))
    out = disj_all(disjuncts)
    memo[m] = out
    return out


def lemma9_complement_to_lazy_itl(m: Monomial, alphabet: frozenset, check: bool = True, maxlen: int = 6):
    """Positive lazy interval formula defining the complement of an unambiguous monomial."""
    if check:
        _gate_unambiguous(m, alphabet, maxlen)
    return simplify(_l9(m, alphabet, {}))


def _l9(m: Monomial, alph: frozenset, memo: dict):
    hit = memo.get(m)
    if hit is not None:
        return hit
    k = m.degree
    if k == 0:
        out = disj_all(First(b, TOP, TOP, True) for b in sorted(alph - m.tail))
        memo[m] = out
        return out
    markers, sets = m.markers(), m.letter_sets()
    i = _split_index_last(m)
    if i is not None:
        ai = markers[i - 1]

        def bad_pair(j_left, j_right):
            return disj(
                Last(ai, _l9(_prefix_mono(m, j_left), alph, memo), TOP, True),
                Last(ai, TOP, _l9(_suffix_mono(m, j_right), alph, memo), True),
            )

        terms = [bad_pair(i, i + 1)]
        for j in range(i + 1, k + 1):
            if ai in sets[j - 1]:
                terms.append(bad_pair(j, j))
        out = disj(
            Atom(HL(ai)),
            disj(Last(ai, TOP, First(ai, TOP, TOP, True), True), conj_all(terms)),
        )
    else:
        i = _split_index_first(m)
        if i is None:
            raise AmbiguousMonomialError(Word.finite("".join(markers) * 2))
        ai = markers[i - 1]

        def bad_pair(j_left, j_right):
            return disj(
                First(ai, _l9(_prefix_mono(m, j_left), alph, memo), TOP, True),
                First(ai, TOP, _l9(_suffix_mono(m, j_right), alph, memo), True),
            )

        terms = [bad_pair(i, i + 1)]
        for j in range(2, i + 1):
            if ai in sets[j - 1]:
                terms.append(bad_pair(j, j))
        out = disj(Atom(HL(ai)), conj_all(terms))
    memo[m] = out
    return out


# -- first-order formulas for ranker positions (Lemma 6) ----------------------

_SWAP_XY = {"x": "y", "y": "x"}


def _mu(steps: tuple, tail: AtomicModality | None):
    if tail is not None:
        a = tail.letter
        if not steps:
            return Forall("y", NotLabel("y", a))
        base = _mu(steps, None)
        if tail.kind == "G":
            clause = Forall("y", Or(Leq("y", "x"), NotLabel("y", a)))
        else:
            clause = Forall("y", Or(Leq("x", "y"), NotLabel("y", a)))
        return And(base, clause)
    *init, last = steps
    a = last.letter
    if not init:
        if last.dir == "X":
            return Forall("y", And(Label("x", a), Or(Leq("x", "y"), NotLabel("y", a))))
        return Forall("y", And(Label("x", a), Or(Leq("y", "x"), NotLabel("y", a))))
    mu_s = _mu(tuple(init), None)
    mu_s_as_y = rename_variables(mu_s, _SWAP_XY)
    if last.dir == "X":
        return And(
            Label("x", a),
            And(
                Exists("y", And(Less("y", "x"), mu_s_as_y)),
                Forall(
                    "y",
                    Or(
                        Leq("x", "y"),
                        Or(NotLabel("y", a), Exists("x", And(Leq("y", "x"), mu_s))),
                    ),
                ),
            ),
        )
    return And(
        Label("x", a),
        And(
            Exists("y", And(Less("x", "y"), mu_s_as_y)),
            Forall(
                "y",
                Or(
                    Leq("y", "x"),
                    Or(NotLabel("y", a), Exists("x", And(Leq("x", "y"), mu_s))),
                ),
            ),
        ),
    )


def _sigma(steps: tuple, tail: AtomicModality | None):
    if tail is not None:
        a = tail.letter
        if not steps:
            return "x1", [], NotLabel("y", a)
        free, exv, matrix = _sigma(steps, None)
        if tail.kind == "G":
            clause = Or(Leq("y", free), NotLabel("y", a))
        else:
            clause = Or(Leq(free, "y"), NotLabel("y", a))
        return free, exv, And(matrix, clause)
    *init, last = steps
    a = last.letter
    if not init:
        if last.dir == "X":
            return "x1", [], And(Label("x1", a), Or(Leq("x1", "y"), NotLabel("y", a)))
        return "x1", [], And(Label("x1", a), Or(Leq("y", "x1"), NotLabel("y", a)))
    free_s, exv, m_s = _sigma(tuple(init), None)
    new = f"x{len(init) + 1}"
    if last.dir == "X":
        matrix = And(
            Label(new, a),
            And(
                Less(free_s, new),
                And(m_s, Or(Leq("y", free_s), Or(Leq(new, "y"), NotLabel("y", a)))),
            ),
        )
    else:
        matrix = And(
            Label(new, a),
            And(
                Less(new, free_s),
                And(m_s, Or(Leq(free_s, "y"), Or(Leq("y", new), NotLabel("y", a)))),
            ),
        )
    return new, [free_s] + exv, matrix


def _validate_lemma6(r: Ranker):
    if r.is_empty:
        raise ValueError("lemma6 needs a non-empty ranker")
    if r.lazy:
        raise ValueError("lemma6 needs an eager ranker")
    if not r.steps and r.tail is not None and r.tail.kind == "H":
        raise ValueError("the lone historically-no ranker is excluded")


def lemma6_mu(r: Ranker):
    """Two-variable formula with free variable x: true exactly at the r-position."""
    _validate_lemma6(r)
    return _mu(r.steps, r.tail)


def lemma6_sigma(r: Ranker):
    """Exists-forall prenex formula with one free variable, pointwise equal to the
    two-variable version."""
    _validate_lemma6(r)
    free, exv, matrix = _sigma(r.steps, r.tail)
    body = Forall("y", matrix)
    for v in reversed(exv):
        body = Exists(v, body)
    return body


def lemma6_sigma_var(r: Ranker) -> str:
    """Name of the free variable of the prenex formula."""
    return f"x{len(r.steps)}" if r.steps else "x1"


# -- complements of X-ranker languages (Lemma 7) -------------------------------


def lemma7_xranker_complement(r: Ranker) -> list:
    """Rankers whose languages together form the complement of an eager X-ranker's
    language: at each split, assert the failure of the next instruction."""
    if r.lazy:
        raise ValueError("lemma7 needs an eager ranker")
    if r.tail is not None and r.tail.kind == "H":
        raise ValueError("lemma7 accepts a globally-no tail only")
    if classify(r)[0] != "X":
        raise ValueError("lemma7 needs an X-ranker")
    out = []
    for t in range(len(r.steps)):
        prefix = r.steps[:t]
        s = r.steps[t]
        if s.dir == "X":
            out.append(Ranker(prefix, G(s.letter)))
        else:
            out.append(Ranker(prefix, H(s.letter)))
    if r.tail is not None:
        out.append(Ranker(r.steps + (X(r.tail.letter),), None))
    return out


# -- lazy-eager constructions behind the full characterisation -----------------


def thm5_negation_elimination(phi):
    """Rewrite a lazy point formula into a positive one by pushing negations into
    the modalities; lazy steps swallow falsity, so the result folds clean."""
    _validate_tl(phi, lazy=True, what="lazy formula")

    def nn(node, negated):
        t = type(node)
        if t is Top:
            return BOTTOM if negated else TOP
        if t is Bottom:
            return TOP if negated else BOTTOM
        if t is Not:
            return nn(node.child, not negated)
        if t is And:
            if negated:
                return disj(nn(node.left, True), nn(node.right, True))
            return conj(nn(node.left, False), nn(node.right, False))
        if t is Or:
            if negated:
                return conj(nn(node.left, True), nn(node.right, True))
            return disj(nn(node.left, False), nn(node.right, False))
        if t is Mod:
            if negated:
                blocked = Atom(
                    AtomicModality("G" if node.step.dir == "X" else "H", node.step.letter, True)
                )
                return disj(blocked, _mk_mod(node.step, nn(node.child, True)))
            return _mk_mod(node.step, nn(node.child, False))
        if t is Atom:
            # the atom is the negation of a step's definedness
            return _mk_mod(atom_step(node.modality), TOP) if negated else node
        raise ValueError(f"not a point-logic node: {node!r}")

    return simplify(nn(phi, False))


def thm5_lazy_ranker_to_tl(r: Ranker):
    """Eager point formula equivalent to definedness of a past-rooted lazy ranker.

    Disjunction over split points: the letters consumed while resting at INF
    must all occur infinitely often, and the remaining suffix, switched to the
    eager flavour, must be defined; splits continuing with a next-step are
    skipped since a next-step cannot leave INF.
    """
    if not r.lazy:
        raise ValueError("needs a lazy ranker")
    if r.tail is not None:
        raise ValueError("trailing atomic modalities are not supported")
    if not r.steps or r.steps[0].dir != "Y":
        raise ValueError("needs a past-rooted ranker")
    k = len(r.steps)
    disjuncts = []
    for i in range(k + 1):
        if i < k and r.steps[i].dir == "X":
            continue
        infinitely = conj_all(
            conj(Mod(X(a), TOP), Not(Mod(Y(a), TOP)))
            for a in sorted({s.letter for s in r.steps[:i]})
        )
        suffix = mod_chain([Step(s.dir, s.letter, False) for s in r.steps[i:]], TOP)
        disjuncts.append(conj(infinitely, suffix))
    return simplify(disj_all(disjuncts))


def thm5_complement_Aim(A: frozenset, alphabet: frozenset):
    """Lazy interval formula intended for the complement of the words whose
    imaginary alphabet is A; the oracle records the language it actually
    defines (some letter outside A repeats forever, or some letter of A occurs
    a finite positive number of times)."""
    outside = disj_all(
        Last(b, TOP, First(b, TOP, TOP, True), True) for b in sorted(alphabet - A)
    )
    inside = disj_all(Last(b, TOP, Atom(GL(b)), True) for b in sorted(A))
    return disj(outside, inside)
