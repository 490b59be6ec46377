"""Free group words over indexed generators.

A letter is a pair ``(gen, sign)`` with ``gen`` a non-negative generator index
and ``sign`` in ``{+1, -1}``.  A :class:`Word` is an immutable tuple of letters
that is always freely reduced.
"""
from __future__ import annotations

from typing import Iterable, Sequence

Letter = tuple[int, int]

_LETTERS: dict[Letter, Letter] = {}


def letter(gen: int, sign: int = 1) -> Letter:
    """Return the shared tuple object for ``(gen, sign)``."""
    key = (gen, sign)
    got = _LETTERS.get(key)
    if got is None:
        if gen < 0 or sign not in (1, -1):
            raise ValueError(f"invalid letter {key!r}")
        got = _LETTERS[key] = key
    return got


def _reduce(letters: Iterable[Letter]) -> list[Letter]:
    stack: list[Letter] = []
    for g, s in letters:
        if stack and stack[-1][0] == g and stack[-1][1] == -s:
            stack.pop()
        else:
            stack.append(letter(g, s))
    return stack


class Word(tuple):
    """Freely reduced word; the empty word is the identity."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[Letter] = ()):
        return super().__new__(cls, _reduce(letters))

    @classmethod
    def _trusted(cls, letters: Sequence[Letter]) -> "Word":
        # caller guarantees `letters` is already reduced
        return super().__new__(cls, letters)

    @classmethod
    def gen(cls, g: int, sign: int = 1) -> "Word":
        return cls._trusted((letter(g, sign),))

    def __mul__(self, other: Sequence[Letter]) -> "Word":
        return Word(tuple(self) + tuple(other))

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return invert(self) ** -k
        return Word(tuple(self) * k)

    def __repr__(self) -> str:
        if not self:
            return "Word()"
        return "Word(" + " ".join(f"{g}" if s > 0 else f"{g}^-1" for g, s in self) + ")"

    def generators(self) -> set[int]:
        return {g for g, _ in self}

    def exponent_sums(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for g, s in self:
            out[g] = out.get(g, 0) + s
        return {g: e for g, e in out.items() if e}

    def occurrences(self, gen: int) -> int:
        """Number of letters (either sign) on generator ``gen``."""
        return sum(1 for g, _ in self if g == gen)


def free_reduce(letters: Iterable[Letter]) -> Word:
    """Freely reduce a raw letter sequence with a single stack pass."""
    return Word(letters)


def invert(w: Sequence[Letter]) -> Word:
    return Word._trusted(tuple(letter(g, -s) for g, s in reversed(w)))


def concat(*words: Sequence[Letter]) -> Word:
    out: list[Letter] = []
    for w in words:
        out.extend(w)
    return Word(out)


def cyclic_reduce(w: Sequence[Letter]) -> tuple[Word, Word]:
    """Split ``w`` as ``conjugator * core * conjugator^-1``.

    ``core`` is cyclically reduced.  ``w`` must already be freely reduced.
    """
    i, j = 0, len(w) - 1
    while i < j and w[i][0] == w[j][0] and w[i][1] == -w[j][1]:
        i += 1
        j -= 1
    return Word._trusted(tuple(w[i:j + 1])), Word._trusted(tuple(w[:i]))


def rotate(w: Sequence[Letter], k: int) -> Word:
    """Cyclic rotation of ``w`` starting at position ``k``."""
    if not w:
        return Word()
    k %= len(w)
    return Word(tuple(w[k:]) + tuple(w[:k]))


def cyclic_normal_form(w: Sequence[Letter]) -> tuple[Letter, ...]:
    """Least rotation of the cyclic core of ``w`` or its inverse.

    Two relators define the same normal closure contribution whenever their
    forms agree.
    """
    core, _ = cyclic_reduce(Word(w))
    if not core:
        return ()
    inv = invert(core)
    n = len(core)
    best = min(tuple(core[k:]) + tuple(core[:k]) for k in range(n))
    best_inv = min(tuple(inv[k:]) + tuple(inv[:k]) for k in range(n))
    return min(best, best_inv)


def format_word(w: Sequence[Letter], names: Sequence[str]) -> str:
    """Render ``w`` as whitespace separated ``name`` / ``name^-1`` tokens."""
    if not w:
        return "1"
    return " ".join(names[g] if s > 0 else f"{names[g]}^-1" for g, s in w)


def parse_word(text: str, names: Sequence[str] | dict[str, int]) -> Word:
    """Inverse of :func:`format_word`.  ``1`` parses to the identity."""
    index = names if isinstance(names, dict) else {nm: i for i, nm in enumerate(names)}
    out: list[Letter] = []
    for tok in text.split():
        if tok == "1":
            continue
        sign = 1
        if tok.endswith("^-1"):
            tok, sign = tok[:-3], -1
        elif tok.endswith("^1"):
            tok = tok[:-2]
        try:
            out.append(letter(index[tok], sign))
        except KeyError:
            raise ValueError(f"unknown generator {tok!r}") from None
    return Word(out)
