"""Rewriting generators in terms of the minimal generating set, with
replayable certificates.

A certificate records how a word is transformed by splicing in relators of a
presentation: each :class:`Move` inserts a cyclic rotation of a relator (or
of its inverse) at a position and freely reduces.  Anyone holding the
presentation can replay the moves and confirm that start and end words are
equal in the group.

Strategy for the gamma families, n >= 5 (``U`` is the set of labels
``(1abc)`` with ``a < c``):

* a label containing 1 but outside ``U`` is moved along dihedral relators
  to its ``U`` member;
* ``(1ijk)`` with ``i < j < k`` or ``j < i < k`` (``i >= 3``) is expanded by
  the pentagon for ``(1,i,j,k,2)``;
* ``(12jk)`` with ``4 <= j < k`` is expanded by the pentagon for
  ``(1,2,j,k,3)``;
* a label without 1 and without 2 is expanded by the pentagon for
  ``(1,i,j,k,l)``;
* a label without 1 but with 2 is moved to the orbit member ``(x,2,y,z)``
  with ``x < y`` and expanded by the pentagon for ``(x,2,y,z,1)``, except when
  ``x = 3`` and ``y < z``: then ``(2,y,z,3)`` is expanded by the pentagon for
  ``(2,1,y,z,3)`` (the other choice would loop back to ``(12yz)``).

Every expansion only produces labels strictly closer to the generating set,
so the process terminates; the first letter outside the set is always
rewritten next.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .groups import Quad, cached_build, check_quad, dihedral_orbit, lambda_generators, quads_of
from .presentation import Presentation
from .words import Word, format_word, invert

MAX_STEPS = 100_000


@dataclass(frozen=True)
class Move:
    """``kind`` is ``"insert"`` or ``"free_reduce"``.

    An insert splices ``rotate(r or r^-1, rotation)`` before ``position`` where
    ``r`` is relator ``relator`` of the presentation.
    """

    kind: str
    position: int = 0
    relator: int = 0
    invert: bool = False
    rotation: int = 0


@dataclass(frozen=True)
class Certificate:
    start: Word
    moves: tuple[Move, ...] = field(default_factory=tuple)
    end: Word = field(default_factory=Word)


def _segment(p: Presentation, mv: Move) -> tuple:
    r = p.relators[mv.relator]
    base = tuple(invert(r)) if mv.invert else tuple(r)
    if not base:
        return ()
    k = mv.rotation % len(base)
    return base[k:] + base[:k]


def replay(c: Certificate, p: Presentation) -> Word:
    w = Word(c.start)
    for mv in c.moves:
        if mv.kind == "free_reduce":
            w = Word(w)
        elif mv.kind == "insert":
            if not 0 <= mv.relator < len(p.relators):
                raise IndexError(f"relator index {mv.relator} out of range")
            if not 0 <= mv.position <= len(w):
                raise ValueError(f"insert position {mv.position} outside word of length {len(w)}")
            w = Word(tuple(w[:mv.position]) + _segment(p, mv) + tuple(w[mv.position:]))
        else:
            raise ValueError(f"unknown move {mv.kind!r}")
    return w


def verify_certificate(c: Certificate, p: Presentation) -> bool:
    """True iff replaying the moves of ``c`` over ``p`` turns start into end."""
    try:
        return replay(c, p) == Word(c.end)
    except ValueError:
        return False


class _Derivation:
    def __init__(self, p: Presentation, start: Word):
        self.p = p
        self.word = start
        self.moves: list[Move] = []

    def replace(self, pos: int, ri: int):
        """Rewrite the letter at ``pos`` using relator ``ri``, which must
        contain that generator exactly once."""
        g, d = self.word[pos]
        r = self.p.relators[ri]
        hits = [t for t, (x, _) in enumerate(r) if x == g]
        if len(hits) != 1:
            raise ValueError(f"relator {ri} does not isolate generator {g}")
        t = hits[0]
        e = r[t][1]
        if d == e:
            mv = Move("insert", pos + 1, ri, True, len(r) - 1 - t)
        else:
            mv = Move("insert", pos + 1, ri, False, t)
        self.word = Word(tuple(self.word[:pos + 1]) + _segment(self.p, mv) + tuple(self.word[pos + 1:]))
        self.moves.append(mv)

    def certificate(self, start: Word) -> Certificate:
        return Certificate(start, tuple(self.moves), self.word)


class _Index:
    """Relator lookup for a full family presentation."""

    def __init__(self, p: Presentation):
        self.p = p
        self.quads = quads_of(p)
        self.idx = {q: i for i, q in enumerate(self.quads)}
        self.pentagon: dict[tuple, int] = {}
        self.edges: dict[Quad, list[tuple[Quad, int]]] = {q: [] for q in self.quads}
        for ri, (r, kind) in enumerate(zip(p.relators, p.kinds)):
            if kind == "pentagon":
                (i, j, k, l), (_, _, _, m) = self.quads[r[0][0]], self.quads[r[1][0]]
                self.pentagon.setdefault((i, j, k, l, m), ri)
            elif kind == "dihedral":
                a, b = self.quads[r[0][0]], self.quads[r[1][0]]
                self.edges[a].append((b, ri))
                self.edges[b].append((a, ri))

    def dihedral_step(self, src: Quad, dst: Quad) -> int:
        """Relator for the first edge on a shortest dihedral path src -> dst."""
        prev: dict[Quad, tuple[Quad, int] | None] = {dst: None}
        todo = deque([dst])
        while todo:
            x = todo.popleft()
            if x == src:
                break
            for y, ri in self.edges[x]:
                if y not in prev:
                    prev[y] = (x, ri)
                    todo.append(y)
        step = prev.get(src)
        if step is None:
            raise ValueError(f"no dihedral path {src} -> {dst}")
        return step[1]


def _upsilon_member(q: Quad) -> Quad:
    return next(x for x in dihedral_orbit(q) if x[0] == 1 and x[1] < x[3])


def _plan(q: Quad) -> tuple[str, tuple]:
    """``("dihedral", target)`` or ``("pentagon", 5-tuple)`` for ``q``."""
    if 1 in q:
        u = _upsilon_member(q)
        if q != u:
            return "dihedral", u
        _, a, b, c = q
        if a == 2:
            return "pentagon", (1, 2, b, c, 3)
        return "pentagon", (1, a, b, c, 2)
    if 2 not in q:
        return "pentagon", (1,) + q
    x, _, y, z = next(o for o in dihedral_orbit(q) if o[1] == 2 and o[0] < o[2])
    if x == 3 and y < z:
        target = (2, y, z, 3)
        if q != target:
            return "dihedral", target
        return "pentagon", (2, 1, y, z, 3)
    rep = (x, 2, y, z)
    if q != rep:
        return "dihedral", rep
    return "pentagon", (x, 2, y, z, 1)


@lru_cache(maxsize=8)
def _index(family: str, n: int) -> _Index:
    return _Index(cached_build(family, n, "full"))


def family_presentation(family: str, n: int) -> Presentation:
    """The full presentation certificates refer to."""
    return _index(family, n).p


def rewrite_in_lambda(q, n: int, family: str = "gamma_hat") -> tuple[Word, Certificate]:
    """Express the generator labelled ``q`` as a word in the minimal
    generating set, returning the word (over the full presentation's
    generator indices) and a certificate against that presentation."""
    q = check_quad(q, n)
    if family in ("delta", "delta_hat") and list(q) != sorted(q):
        raise ValueError(f"{q} is not an increasing quadruple")
    if family not in ("gamma", "gamma_hat", "delta", "delta_hat"):
        raise ValueError(f"unknown family {family!r}")
    ix = _index(family, n)
    lam = {ix.idx[x] for x in lambda_generators(n, family)}
    start = Word.gen(ix.idx[q])
    d = _Derivation(ix.p, start)
    for _ in range(MAX_STEPS):
        pos = next((i for i, (g, _) in enumerate(d.word) if g not in lam), None)
        if pos is None:
            return d.word, d.certificate(start)
        sym = ix.quads[d.word[pos][0]]
        if family in ("delta", "delta_hat"):
            d.replace(pos, ix.pentagon[(1,) + sym])
            continue
        kind, arg = _plan(sym)
        if kind == "dihedral":
            d.replace(pos, ix.dihedral_step(sym, arg))
        else:
            d.replace(pos, ix.pentagon[arg])
    raise RuntimeError(f"rewriting {q} did not terminate")


def format_lambda_word(w: Word, n: int, family: str = "gamma_hat") -> str:
    return format_word(w, family_presentation(family, n).generators)


def labelled(w: Word, n: int, family: str = "gamma_hat") -> list[tuple[Quad, int]]:
    quads = _index(family, n).quads
    return [(quads[g], s) for g, s in w]
