"""Word model: finite words and lasso words u·v^ω over single-character letters.

Positions are 1-indexed.  Two extra anchor values exist: ``START`` (= 0), the
virtual position in front of the word, and ``INF``, the single position behind
the word.  Neither anchor carries a letter.

Two order relations are in play.  Step semantics for rankers use the ordinary
order on the naturals with ``y < INF`` for every natural ``y`` (and nothing
beyond that).  Interval semantics additionally set ``INF < INF``; that variant
is :func:`lt_itl` and is used nowhere else.
"""

from __future__ import annotations

from typing import Optional, Union

__all__ = [
    "INF",
    "START",
    "Position",
    "Word",
    "letter_at",
    "alphabet_of",
    "imaginary_of",
    "lt_itl",
    "le_itl",
]


class _Infinity:
    """The unique infinite position."""

    __slots__ = ()
    _instance: Optional["_Infinity"] = None

    def __new__(cls) -> "_Infinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"


INF = _Infinity()
START = 0

#: A position: START (0), a 1-indexed letter position, or INF.
Position = Union[int, _Infinity]


class Word:
    """A finite word or a lasso u·v^ω.

    ``period is None`` means the word is finite and equals ``prefix``.
    Otherwise the word is the infinite word ``prefix + period + period + …``
    and ``period`` must be non-empty.

    Instances are immutable by convention; occurrence lookups are memoised on
    the instance, so sharing a Word between evaluations is cheap.
    """

    __slots__ = ("prefix", "period", "_next", "_prev", "_alph", "_im")

    def __init__(self, prefix: str, period: str | None = None):
        if period is not None and len(period) == 0:
            raise ValueError("lasso period must be non-empty")
        self.prefix = prefix
        self.period = period
        self._next: dict = {}
        self._prev: dict = {}
        self._alph: frozenset | None = None
        self._im: frozenset | None = None

    @classmethod
    def finite(cls, letters: str) -> "Word":
        return cls(letters, None)

    @classmethod
    def lasso(cls, prefix: str, period: str) -> "Word":
        return cls(prefix, period)

    @property
    def is_finite(self) -> bool:
        return self.period is None

    def length(self) -> Position:
        return len(self.prefix) if self.period is None else INF

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.prefix == other.prefix and self.period == other.period

    def __hash__(self) -> int:
        return hash((self.prefix, self.period))

    def __repr__(self) -> str:
        if self.period is None:
            return f"Word.finite({self.prefix!r})"
        return f"Word.lasso({self.prefix!r}, {self.period!r})"

    def unroll(self, n: int) -> str:
        """The first ``n`` letters (shorter if the word is finite and short)."""
        if self.period is None:
            return self.prefix[:n]
        out = self.prefix
        while len(out) < n:
            out += self.period
        return out[:n]

    def canonical(self) -> "Word":
        """Shortest-period, shortest-prefix representation of the same word.

        Intended for equality checks and display; all semantics are invariant
        under non-canonical representations anyway.
        """
        if self.period is None:
            return self
        u, v = self.prefix, self.period
        for p in range(1, len(v) + 1):
            if len(v) % p == 0 and v == v[:p] * (len(v) // p):
                v = v[:p]
                break
        while u and u[-1] == v[-1]:
            v = v[-1] + v[:-1]
            u = u[:-1]
        return Word(u, v)

    # -- occurrence lookups -------------------------------------------------

    def next_occurrence(self, letter: str, pos: int) -> int | None:
        """Least position > pos carrying ``letter``, or None."""
        key = (letter, pos)
        hit = self._next.get(key, self)
        if hit is not self:
            return hit
        out: int | None
        if self.period is None:
            out = None
            for q in range(pos + 1, len(self.prefix) + 1):
                if self.prefix[q - 1] == letter:
                    out = q
                    break
        else:
            out = None
            nu = len(self.prefix)
            for q in range(pos + 1, nu + 1):
                if self.prefix[q - 1] == letter:
                    out = q
                    break
            if out is None and letter in self.period:
                base = max(pos, nu)
                for q in range(base + 1, base + len(self.period) + 1):
                    if letter_at(self, q) == letter:
                        out = q
                        break
        self._next[key] = out
        return out

    def prev_occurrence(self, letter: str, pos: int) -> int | None:
        """Greatest position < pos carrying ``letter``, or None."""
        key = (letter, pos)
        hit = self._prev.get(key, self)
        if hit is not self:
            return hit
        out = None
        for q in range(pos - 1, 0, -1):
            if letter_at(self, q) == letter:
                out = q
                break
        self._prev[key] = out
        return out

    def last_occurrence(self, letter: str) -> int | None:
        """Greatest position carrying ``letter`` if there are finitely many,
        else None (absent, or occurring infinitely often)."""
        if self.period is not None and letter in self.period:
            return None
        base = self.prefix
        for q in range(len(base), 0, -1):
            if base[q - 1] == letter:
                return q
        return None


def letter_at(w: Word, p: Position) -> str:
    """The letter at 1-indexed position ``p``."""
    if isinstance(p, _Infinity) or p == START:
        raise ValueError("no letter at anchor position")
    if p < 1:
        raise ValueError(f"positions are 1-indexed, got {p}")
    if w.period is None:
        if p > len(w.prefix):
            raise ValueError(f"position {p} out of range for finite word of length {len(w.prefix)}")
        return w.prefix[p - 1]
    nu = len(w.prefix)
    if p <= nu:
        return w.prefix[p - 1]
    return w.period[(p - nu - 1) % len(w.period)]


def alphabet_of(w: Word) -> frozenset:
    """Set of letters occurring in ``w``."""
    if w._alph is None:
        letters = set(w.prefix)
        if w.period is not None:
            letters |= set(w.period)
        w._alph = frozenset(letters)
    return w._alph


def imaginary_of(w: Word) -> frozenset:
    """Set of letters occurring infinitely often in ``w`` (empty for finite words)."""
    if w._im is None:
        w._im = frozenset() if w.period is None else frozenset(w.period)
    return w._im


def lt_itl(p: Position, q: Position) -> bool:
    """Strict order used by interval semantics: INF < INF holds."""
    if q is INF:
        return True
    if p is INF:
        return False
    return p < q


def le_itl(p: Position, q: Position) -> bool:
    return p == q or lt_itl(p, q)
