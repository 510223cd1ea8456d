"""Parsers and printers for the textual grammars: words, rankers, point and
interval formulas, monomials and first-order formulas.

Parsing and printing round-trip: parse(print(x)) == x for every AST.
"""

from __future__ import annotations

import re

from .fo import Exists, Forall, Label, Leq, Less, NotLabel
from .formulas import And, Atom, Bottom, Not, Or, Top, TOP, BOTTOM
from .itl import First, Last
from .monomials import Monomial
from .rankers import AtomicModality, Ranker, Step
from .tl import Mod
from .words import INF, START, Word

__all__ = [
    "ParseError",
    "parse_word", "format_word",
    "parse_position", "format_position",
    "parse_ranker", "format_ranker",
    "parse_tl", "format_tl",
    "parse_itl", "format_itl",
    "parse_monomial", "format_monomial",
    "parse_fo", "format_fo",
    "format_ranker_language",
]


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


_STEP_RE = re.compile(r"^([XY])(L?)([a-z0-9])$")
_ATOM_RE = re.compile(r"^([GH])(L?)n:([a-z0-9])$")
_CHOP_RE = re.compile(r"^([FL])(L?)([a-z0-9])$")


def _check_letter(letter: str, alphabet, pos: int):
    if alphabet is not None and letter not in alphabet:
        raise ParseError(f"letter {letter!r} outside the declared alphabet", pos)


# -- words ---------------------------------------------------------------------


def parse_word(text: str, alphabet=None) -> Word:
    s = text.strip()
    if "|" in s:
        u, _, v = s.partition("|")
        u = "" if u in ("", "_") else u
        if not v:
            raise ParseError("lasso period must be non-empty", len(s))
        for i, c in enumerate(u + v):
            _check_letter(c, alphabet, i)
        return Word.lasso(u, v)
    if s == "_":
        return Word.finite("")
    if not s:
        raise ParseError("empty word is spelled '_'", 0)
    for i, c in enumerate(s):
        _check_letter(c, alphabet, i)
    return Word.finite(s)


def format_word(w: Word) -> str:
    if w.period is not None:
        return f"{w.prefix}|{w.period}"
    return w.prefix if w.prefix else "_"


def parse_position(text: str):
    s = text.strip().lower()
    if s in ("inf", "infinity"):
        return INF
    if s == "start":
        return START
    try:
        n = int(s)
    except ValueError:
        raise ParseError(f"not a position: {text!r}", 0) from None
    if n < 0:
        raise ParseError("positions are not negative", 0)
    return n


def format_position(p) -> str:
    if p is INF:
        return "inf"
    if p == START:
        return "start"
    return str(p)


# -- tokenizer for the formula grammars -----------------------------------------

_SYMBOLS = ("!=", "<=", ">=", "<", ">", "=", "(", ")", "!", "&", "|", ".", "[", "]", "*")
_WORD_RE = re.compile(r"[A-Za-z0-9:]+")


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items: list = []
        i = 0
        while i < len(text):
            if text[i].isspace():
                i += 1
                continue
            for sym in _SYMBOLS:
                if text.startswith(sym, i):
                    self.items.append((sym, i))
                    i += len(sym)
                    break
            else:
                m = _WORD_RE.match(text, i)
                if not m:
                    raise ParseError(f"unexpected character {text[i]!r}", i)
                self.items.append((m.group(0), i))
                i = m.end()
        self.k = 0

    def peek(self):
        return self.items[self.k][0] if self.k < len(self.items) else None

    def pos(self) -> int:
        return self.items[self.k][1] if self.k < len(self.items) else len(self.text)

    def take(self):
        tok = self.items[self.k]
        self.k += 1
        return tok

    def expect(self, sym: str):
        if self.peek() != sym:
            raise ParseError(f"expected {sym!r}, found {self.peek()!r}", self.pos())
        return self.take()

    def done(self):
        if self.k < len(self.items):
            raise ParseError(f"trailing input {self.peek()!r}", self.pos())


# -- rankers ---------------------------------------------------------------------


def _parse_modality(token: str, pos: int, alphabet):
    m = _STEP_RE.match(token)
    if m:
        _check_letter(m.group(3), alphabet, pos)
        return Step(m.group(1), m.group(3), m.group(2) == "L")
    m = _ATOM_RE.match(token)
    if m:
        _check_letter(m.group(3), alphabet, pos)
        return AtomicModality(m.group(1), m.group(3), m.group(2) == "L")
    raise ParseError(f"not a ranker modality: {token!r}", pos)


def parse_ranker(text: str, alphabet=None) -> Ranker:
    toks = text.split()
    if toks == ["e"]:
        return Ranker((), None)
    if not toks:
        raise ParseError("empty ranker is spelled 'e'", 0)
    mods = []
    offset = 0
    for t in toks:
        mods.append(_parse_modality(t, text.find(t, offset), alphabet))
        offset = text.find(t, offset) + len(t)
    steps, tail = mods, None
    if isinstance(mods[-1], AtomicModality):
        steps, tail = mods[:-1], mods[-1]
    for i, s in enumerate(steps):
        if not isinstance(s, Step):
            raise ParseError("atomic modalities may appear only at the end", 0)
    try:
        return Ranker(tuple(steps), tail)
    except ValueError as exc:
        raise ParseError(str(exc), 0) from None


def format_step(s: Step) -> str:
    return f"{s.dir}{'L' if s.lazy else ''}{s.letter}"


def format_atom(m: AtomicModality) -> str:
    return f"{m.kind}{'L' if m.lazy else ''}n:{m.letter}"


def format_ranker(r: Ranker) -> str:
    parts = [format_step(s) for s in r.steps]
    if r.tail is not None:
        parts.append(format_atom(r.tail))
    return " ".join(parts) if parts else "e"


# -- point formulas ----------------------------------------------------------------


def parse_tl(text: str, alphabet=None):
    toks = _Tokens(text)
    phi = _tl_or(toks, alphabet)
    toks.done()
    return phi


def _tl_or(toks, alphabet):
    phi = _tl_and(toks, alphabet)
    while toks.peek() == "|":
        toks.take()
        phi = Or(phi, _tl_and(toks, alphabet))
    return phi


def _tl_and(toks, alphabet):
    phi = _tl_not(toks, alphabet)
    while toks.peek() == "&":
        toks.take()
        phi = And(phi, _tl_not(toks, alphabet))
    return phi


def _tl_not(toks, alphabet):
    if toks.peek() == "!":
        toks.take()
        return Not(_tl_not(toks, alphabet))
    return _tl_primary(toks, alphabet)


def _tl_primary(toks, alphabet):
    tok = toks.peek()
    pos = toks.pos()
    if tok is None:
        raise ParseError("unexpected end of formula", pos)
    if tok == "(":
        toks.take()
        phi = _tl_or(toks, alphabet)
        toks.expect(")")
        return phi
    toks.take()
    if tok == "T":
        return TOP
    if tok == "F":
        return BOTTOM
    m = _ATOM_RE.match(tok)
    if m:
        _check_letter(m.group(3), alphabet, pos)
        return Atom(AtomicModality(m.group(1), m.group(3), m.group(2) == "L"))
    m = _STEP_RE.match(tok)
    if m:
        _check_letter(m.group(3), alphabet, pos)
        toks.expect("(")
        child = _tl_or(toks, alphabet)
        toks.expect(")")
        return Mod(Step(m.group(1), m.group(3), m.group(2) == "L"), child)
    raise ParseError(f"unexpected token {tok!r}", pos)


def format_tl(phi) -> str:
    # precedence: | lowest, then &, then !
    def go(node, level):
        t = type(node)
        if t is Top:
            return "T"
        if t is Bottom:
            return "F"
        if t is Atom:
            return format_atom(node.modality)
        if t is Mod:
            return f"{format_step(node.step)}({go(node.child, 0)})"
        if t is Not:
            return "!" + go(node.child, 3)
        if t is And:
            s = f"{go(node.left, 1)} & {go(node.right, 2)}"
            return f"({s})" if level > 1 else s
        if t is Or:
            s = f"{go(node.left, 0)} | {go(node.right, 1)}"
            return f"({s})" if level > 0 else s
        raise ValueError(f"not a point-logic node: {node!r}")

    return go(phi, 0)


# -- interval formulas ---------------------------------------------------------------


def parse_itl(text: str, alphabet=None):
    toks = _Tokens(text)
    phi = _itl_or(toks, alphabet)
    toks.done()
    return phi


def _itl_or(toks, alphabet):
    phi = _itl_and(toks, alphabet)
    while toks.peek() == "|":
        toks.take()
        phi = Or(phi, _itl_and(toks, alphabet))
    return phi


def _itl_and(toks, alphabet):
    phi = _itl_chop(toks, alphabet)
    while toks.peek() == "&":
        toks.take()
        phi = And(phi, _itl_chop(toks, alphabet))
    return phi


def _itl_chop(toks, alphabet):
    left = _itl_not(toks, alphabet)
    tok = toks.peek()
    if tok is not None and _CHOP_RE.match(tok) and not _ATOM_RE.match(tok):
        pos = toks.pos()
        toks.take()
        m = _CHOP_RE.match(tok)
        _check_letter(m.group(3), alphabet, pos)
        right = _itl_not(toks, alphabet)
        nxt = toks.peek()
        if nxt is not None and _CHOP_RE.match(nxt) and not _ATOM_RE.match(nxt):
            raise ParseError("chained interval modalities need parentheses", toks.pos())
        cls = First if m.group(1) == "F" else Last
        return cls(m.group(3), left, right, m.group(2) == "L")
    return left


def _itl_not(toks, alphabet):
    if toks.peek() == "!":
        toks.take()
        return Not(_itl_not(toks, alphabet))
    return _itl_primary(toks, alphabet)


def _itl_primary(toks, alphabet):
    tok = toks.peek()
    pos = toks.pos()
    if tok is None:
        raise ParseError("unexpected end of formula", pos)
    if tok == "(":
        toks.take()
        phi = _itl_or(toks, alphabet)
        toks.expect(")")
        return phi
    toks.take()
    if tok == "T":
        return TOP
    if tok == "F":
        return BOTTOM
    m = _ATOM_RE.match(tok)
    if m:
        _check_letter(m.group(3), alphabet, pos)
        return Atom(AtomicModality(m.group(1), m.group(3), m.group(2) == "L"))
    raise ParseError(f"unexpected token {tok!r}", pos)


def _format_chop_token(node) -> str:
    kind = "F" if isinstance(node, First) else "L"
    return f"{kind}{'L' if node.lazy else ''}{node.letter}"


def format_itl(phi) -> str:
    # precedence: |(0) < &(1) < chop(2) < !(3); chop is non-associative
    def go(node, level):
        t = type(node)
        if t is Top:
            return "T"
        if t is Bottom:
            return "F"
        if t is Atom:
            return format_atom(node.modality)
        if t in (First, Last):
            s = f"{go(node.left, 3)} {_format_chop_token(node)} {go(node.right, 3)}"
            return f"({s})" if level > 2 else s
        if t is Not:
            return "!" + go(node.child, 4)
        if t is And:
            s = f"{go(node.left, 2)} & {go(node.right, 2)}"
            return f"({s})" if level > 1 else s
        if t is Or:
            s = f"{go(node.left, 1)} | {go(node.right, 1)}"
            return f"({s})" if level > 0 else s
        raise ValueError(f"not an interval-logic node: {node!r}")

    return go(phi, 0)


# -- monomials -------------------------------------------------------------------


def parse_monomial(text: str, alphabet=None) -> Monomial:
    toks = _Tokens(text)

    def letter_set():
        toks.expect("[")
        letters = set()
        if toks.peek() != "]":
            tok, pos = toks.take()
            for i, c in enumerate(tok):
                _check_letter(c, alphabet, pos + i)
                letters.add(c)
        toks.expect("]")
        return frozenset(letters)

    blocks = []
    while toks.peek() != ".":
        if toks.peek() is None:
            raise ParseError("monomial needs a '. [tail]' part", toks.pos())
        A = letter_set()
        toks.expect("*")
        tok, pos = toks.take()
        if len(tok) != 1:
            raise ParseError(f"marker must be a single letter, found {tok!r}", pos)
        _check_letter(tok, alphabet, pos)
        blocks.append((A, tok))
    toks.expect(".")
    tail = letter_set()
    toks.done()
    return Monomial(tuple(blocks), tail)


def _format_set(A: frozenset) -> str:
    return "[" + "".join(sorted(A)) + "]"


def format_monomial(m: Monomial) -> str:
    parts = [f"{_format_set(A)}* {a}" for A, a in m.blocks]
    parts.append(f". {_format_set(m.tail)}")
    return " ".join(parts)


# -- first-order formulas -----------------------------------------------------------


def parse_fo(text: str, alphabet=None):
    toks = _Tokens(text)
    phi = _fo_quant(toks, alphabet)
    toks.done()
    return phi


_FO_RESERVED = {"E", "A", "T", "F", "lab"}


def _fo_var(toks):
    tok, pos = toks.take()
    if not tok or not tok[0].isalpha() or tok in _FO_RESERVED:
        raise ParseError(f"not a variable name: {tok!r}", pos)
    return tok


def _fo_quant(toks, alphabet):
    if toks.peek() in ("E", "A"):
        q, _ = toks.take()
        var = _fo_var(toks)
        toks.expect(".")
        body = _fo_quant(toks, alphabet)
        return Exists(var, body) if q == "E" else Forall(var, body)
    return _fo_or(toks, alphabet)


def _fo_or(toks, alphabet):
    phi = _fo_and(toks, alphabet)
    while toks.peek() == "|":
        toks.take()
        phi = Or(phi, _fo_and(toks, alphabet))
    return phi


def _fo_and(toks, alphabet):
    phi = _fo_not(toks, alphabet)
    while toks.peek() == "&":
        toks.take()
        phi = And(phi, _fo_not(toks, alphabet))
    return phi


def _fo_not(toks, alphabet):
    if toks.peek() == "!":
        toks.take()
        return Not(_fo_not(toks, alphabet))
    return _fo_primary(toks, alphabet)


def _fo_primary(toks, alphabet):
    tok = toks.peek()
    pos = toks.pos()
    if tok is None:
        raise ParseError("unexpected end of formula", pos)
    if tok == "(":
        toks.take()
        phi = _fo_quant(toks, alphabet)
        toks.expect(")")
        return phi
    if tok in ("E", "A"):
        return _fo_quant(toks, alphabet)
    toks.take()
    if tok == "T":
        return TOP
    if tok == "F":
        return BOTTOM
    if tok == "lab":
        toks.expect("(")
        var = _fo_var(toks)
        toks.expect(")")
        op, op_pos = toks.take()
        if op not in ("=", "!="):
            raise ParseError(f"expected '=' or '!=', found {op!r}", op_pos)
        letter, lpos = toks.take()
        if len(letter) != 1:
            raise ParseError(f"letters are single characters, found {letter!r}", lpos)
        _check_letter(letter, alphabet, lpos)
        return Label(var, letter) if op == "=" else NotLabel(var, letter)
    if tok[0].isalpha():
        op, op_pos = toks.take()
        rhs = _fo_var(toks)
        if op == "<":
            return Less(tok, rhs)
        if op == "<=":
            return Leq(tok, rhs)
        if op == ">":
            return Less(rhs, tok)
        if op == ">=":
            return Leq(rhs, tok)
        raise ParseError(f"expected a comparison, found {op!r}", op_pos)
    raise ParseError(f"unexpected token {tok!r}", pos)


def format_fo(phi) -> str:
    def atom_or_quant(node) -> bool:
        return type(node) in (Top, Bottom, Label, NotLabel, Less, Leq, Exists, Forall)

    def go(node, level):
        t = type(node)
        if t is Top:
            return "T"
        if t is Bottom:
            return "F"
        if t is Label:
            return f"lab({node.var}) = {node.letter}"
        if t is NotLabel:
            return f"lab({node.var}) != {node.letter}"
        if t is Less:
            return f"{node.lhs} < {node.rhs}"
        if t is Leq:
            return f"{node.lhs} <= {node.rhs}"
        if t in (Exists, Forall):
            q = "E" if t is Exists else "A"
            body = node.body
            inner = go(body, 0)
            if not atom_or_quant(body):
                inner = f"({inner})"
            return f"{q} {node.var}. {inner}"
        if t is Not:
            child = go(node.child, 3)
            if type(node.child) not in (Top, Bottom):
                child = f"({child})"
            return "!" + child
        if t is And:
            s = f"{go(node.left, 1)} & {go(node.right, 2)}"
            return f"({s})" if level > 1 else s
        if t is Or:
            s = f"{go(node.left, 0)} | {go(node.right, 1)}"
            return f"({s})" if level > 0 else s
        raise ValueError(f"not a first-order node: {node!r}")

    return go(phi, 0)


# -- ranker languages ----------------------------------------------------------------


def format_ranker_language(lang) -> str:
    def go(node, level):
        t = type(node)
        if t is Ranker:
            return f"L({format_ranker(node)})"
        if t is Top:
            return "T"
        if t is Bottom:
            return "F"
        if t is Not:
            return "!" + go(node.child, 3)
        if t is And:
            s = f"{go(node.left, 1)} & {go(node.right, 2)}"
            return f"({s})" if level > 1 else s
        if t is Or:
            s = f"{go(node.left, 0)} | {go(node.right, 1)}"
            return f"({s})" if level > 0 else s
        raise ValueError(f"not a ranker-language node: {node!r}")

    return go(lang, 0)
