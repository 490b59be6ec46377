"""Reidemeister-Schreier presentations of kernels of maps onto finite abelian
groups.

Cosets of the kernel are the elements of the image subgroup, so the coset
table is a breadth-first walk over image vectors.  The Schreier generator for
the pair (coset ``c``, generator ``x``) stands for ``t_c x (t_{cx})^-1``; it is
freely trivial when ``t_c x`` freely reduces to the representative ``t_{cx}``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .homs import AbelianHom, check_well_defined
from .lattice import AbelianInvariants, SparseIntMatrix, cokernel, h1
from .presentation import Meta, Presentation, tietze_simplify
from .words import Word, letter

# above this index h1_kernel skips Tietze and streams relators into the matrix
STREAM_INDEX = 64


@dataclass(frozen=True)
class CosetTable:
    """``fwd[c, g]`` is ``c . g`` and ``bwd[c, g]`` is ``c . g^-1``."""

    elements: tuple[tuple[int, ...], ...]
    fwd: np.ndarray
    bwd: np.ndarray
    hom: AbelianHom

    @property
    def index(self) -> int:
        return len(self.elements)

    @property
    def ngens(self) -> int:
        return self.fwd.shape[1]

    def act(self, c: int, word) -> int:
        for g, s in word:
            c = int(self.fwd[c, g] if s > 0 else self.bwd[c, g])
        return c


def coset_table(p: Presentation, h: AbelianHom) -> CosetTable:
    if len(h.images) != p.ngens:
        raise ValueError("homomorphism and presentation disagree on generator count")
    if not h.is_finite:
        raise ValueError(f"{h.name} has an infinite image; coset enumeration needs a finite target")
    bad = check_well_defined(h, p)
    if bad:
        raise ValueError(f"{h.name} is not well defined: relators {bad[:5]} do not vanish")
    g = p.ngens
    zero = tuple(h.reduce(np.zeros(h.dim, dtype=np.int64)).tolist())
    index = {zero: 0}
    elements = [zero]
    fwd_rows: list[list[int]] = []
    bwd_rows: list[list[int]] = []
    todo = deque([zero])
    while todo:
        v = np.array(todo.popleft(), dtype=np.int64)
        f_row, b_row = [], []
        for x in range(g):
            for sign, row in ((1, f_row), (-1, b_row)):
                w = tuple(h.reduce(v + sign * h.images[x]).tolist())
                if w not in index:
                    index[w] = len(elements)
                    elements.append(w)
                    todo.append(w)
                row.append(index[w])
        fwd_rows.append(f_row)
        bwd_rows.append(b_row)
    shape = (len(elements), g)
    fwd = np.array(fwd_rows, dtype=np.int64).reshape(shape)
    bwd = np.array(bwd_rows, dtype=np.int64).reshape(shape)
    return CosetTable(tuple(elements), fwd, bwd, h)


def schreier_transversal(t: CosetTable) -> list[Word]:
    """Breadth-first representatives, generators in index order, positive
    letter before its inverse.  Prefix closed by construction."""
    reps: list[Word | None] = [None] * t.index
    reps[0] = Word()
    todo = deque([0])
    while todo:
        c = todo.popleft()
        for x in range(t.ngens):
            for s, table in ((1, t.fwd), (-1, t.bwd)):
                d = int(table[c, x])
                if reps[d] is None:
                    reps[d] = Word(tuple(reps[c]) + (letter(x, s),))
                    todo.append(d)
    return reps  # type: ignore[return-value]


def transversal_from_words(t: CosetTable, words: Sequence[Word]) -> list[Word]:
    """Order user supplied representatives by coset, checking coverage and
    the Schreier (prefix closed) property."""
    reps: list[Word | None] = [None] * t.index
    for w in words:
        w = Word(w)
        c = t.act(0, w)
        if reps[c] is not None:
            raise ValueError(f"two representatives for coset {c}")
        reps[c] = w
    missing = [c for c, w in enumerate(reps) if w is None]
    if missing:
        raise ValueError(f"no representative for cosets {missing[:5]}")
    if reps[0]:
        raise ValueError("the subgroup coset must be represented by the empty word")
    have = set(reps)
    for w in reps:
        for k in range(len(w)):
            if Word._trusted(tuple(w[:k])) not in have:
                raise ValueError("transversal is not prefix closed")
    return reps  # type: ignore[return-value]


def parse_transversal(text: str, p: Presentation) -> list[Word]:
    """``"1;(1234)"`` style list of words."""
    return [p.word(part) for part in text.split(";")]


def trivial_pairs(t: CosetTable, reps: Sequence[Word]) -> set[tuple[int, int]]:
    out = set()
    for c, w in enumerate(reps):
        for x in range(t.ngens):
            if Word(tuple(w) + (letter(x, 1),)) == reps[int(t.fwd[c, x])]:
                out.add((c, x))
    return out


def tau(word, coset: int, t: CosetTable) -> list[tuple[int, int, int]]:
    """Rewriting process starting at ``coset``: one ``(c, x, sign)`` Schreier
    symbol per letter, trivial ones included."""
    out = []
    c = coset
    for x, s in word:
        if s > 0:
            out.append((c, x, 1))
            c = int(t.fwd[c, x])
        else:
            c = int(t.bwd[c, x])
            out.append((c, x, -1))
    if c != coset:
        raise ValueError("word does not lie in the kernel")
    return out


def schreier_name(c: int, x: int, p: Presentation, t: CosetTable) -> str:
    base = p.generators[x]
    if t.index == 2:
        return ("alpha" if c == 0 else "beta") + base
    return f"s{c}{base}" if base.startswith("(") else f"s{c}_{base}"


def format_tau(symbols, p: Presentation, t: CosetTable) -> str:
    return " ".join(schreier_name(c, x, p, t) + ("^-1" if s < 0 else "") for c, x, s in symbols) or "1"


@dataclass(frozen=True)
class RSResult:
    presentation: Presentation
    naming: dict
    trivial: frozenset
    tau_relators: int


def rs_presentation(p: Presentation, t: CosetTable,
                    transversal: Sequence[Word] | None = None) -> RSResult:
    """Presentation of the kernel on all ``index * ngens`` Schreier generators.

    Relators are ``tau(t_c r t_c^-1)`` for every coset and relator, in that
    order, followed by one length one relator per freely trivial generator.
    Inside the tau relators the trivial generators are already replaced by
    the identity.
    """
    reps = list(transversal) if transversal is not None else schreier_transversal(t)
    g = p.ngens
    triv = trivial_pairs(t, reps)
    names = [schreier_name(c, x, p, t) for c in range(t.index) for x in range(g)]
    rels: list[Word] = []
    kinds: list[str] = []
    for c in range(t.index):
        for r in p.relators:
            rels.append(Word(letter(cc * g + x, s) for cc, x, s in tau(r, c, t) if (cc, x) not in triv))
            kinds.append("tau")
    for c, x in sorted(triv):
        rels.append(Word.gen(c * g + x))
        kinds.append("trivial")
    naming = {
        names[c * g + x]: {"coset": c, "representative": p.format(reps[c]),
                           "generator": p.generators[x], "trivial": (c, x) in triv}
        for c in range(t.index) for x in range(g)
    }
    q = Presentation(tuple(names), tuple(rels), Meta("custom", p.meta.n, "full"), tuple(kinds))
    return RSResult(q, naming, frozenset(triv), t.index * len(p.relators))


def rs_relation_matrix(p: Presentation, t: CosetTable,
                       transversal: Sequence[Word] | None = None) -> SparseIntMatrix:
    """Abelianized relators of the kernel, streamed coset by coset.  Columns
    of freely trivial generators are left out, which is the same as killing
    them."""
    reps = list(transversal) if transversal is not None else schreier_transversal(t)
    g = p.ngens
    triv = trivial_pairs(t, reps)
    cols = {}
    for c in range(t.index):
        for x in range(g):
            if (c, x) not in triv:
                cols[c * g + x] = len(cols)
    rows = []
    for c in range(t.index):
        for r in p.relators:
            row: dict[int, int] = {}
            for cc, x, s in tau(r, c, t):
                j = cols.get(cc * g + x)
                if j is not None:
                    row[j] = row.get(j, 0) + s
            rows.append({j: v for j, v in row.items() if v})
    return SparseIntMatrix.from_row_dicts(rows, len(cols))


def h1_kernel(p: Presentation, h: AbelianHom, transversal: Sequence[Word] | None = None,
              simplify: bool | None = None, progress=None) -> AbelianInvariants:
    """H1 of the kernel of ``h``.  ``simplify`` defaults to Tietze reduction
    for small index and streaming for large index."""
    t = coset_table(p, h)
    if transversal is not None:
        transversal = transversal_from_words(t, transversal)
    if simplify is None:
        simplify = t.index <= STREAM_INDEX
    if simplify:
        q = rs_presentation(p, t, transversal).presentation
        return h1(tietze_simplify(q)[0])
    return cokernel(rs_relation_matrix(p, t, transversal), progress=progress)
