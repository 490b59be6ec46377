"""Builders for the four group families and their generator labels.

Generators are labelled by ordered quadruples ``(i, j, k, l)`` of distinct
integers in ``1..n`` and named ``(ijkl)`` (comma separated for ``n > 9``).
Generator indices follow lexicographic order of the labels.

Families
--------
``gamma``      involutive, commutative, pentagon and dihedral relators.
``gamma_hat``  commutative, signed pentagon and signed dihedral relators.
``delta``      increasing quadruples only; involutive, commutative, pentagon.
``delta_hat``  as ``delta`` without involutions and with signed pentagons.

Reduced mode (``gamma``, ``gamma_hat``) keeps one generator per dihedral
orbit, the lexicographically least label, substituting ``x -> c^{+-1}``
everywhere.  Commutators are then only needed between orbit representatives:
every other label is the representative or its inverse, and commuting with
an inverse is the same condition.  For ``gamma`` the pentagons shrink to the
twelve orientation classes per 5-subset (the pentagon for ``(i,j,k,l,m)`` is
a consequence of the one for its cyclic shift or reversal once involutive and
dihedral relators are available).  ``gamma_hat`` keeps every ordered 5-tuple.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .presentation import Meta, Presentation
from .words import Word, letter

Quad = tuple[int, int, int, int]


def quad_name(q: Sequence[int], n: int | None = None) -> str:
    if (n is not None and n > 9) or max(q) > 9:
        return "(" + ",".join(map(str, q)) + ")"
    return "(" + "".join(map(str, q)) + ")"


def parse_quad(name: str) -> Quad | None:
    """Label of a generator named like ``(1234)`` or ``(10,2,3,4)``; else None."""
    if not (name.startswith("(") and name.endswith(")")):
        return None
    body = name[1:-1]
    parts = body.split(",") if "," in body else list(body)
    try:
        q = tuple(int(x) for x in parts)
    except ValueError:
        return None
    if len(q) != 4 or len(set(q)) != 4:
        return None
    return q  # type: ignore[return-value]


def quads_of(p: Presentation) -> list[Quad]:
    out = []
    for name in p.generators:
        q = parse_quad(name)
        if q is None:
            raise ValueError(f"generator {name!r} is not a quadruple label")
        out.append(q)
    return out


def check_quad(q: Sequence[int], n: int) -> Quad:
    q = tuple(int(x) for x in q)
    if len(q) != 4 or len(set(q)) != 4 or not all(1 <= x <= n for x in q):
        raise ValueError(f"{q} is not a quadruple of distinct entries in 1..{n}")
    return q  # type: ignore[return-value]


def shift(q: Quad) -> Quad:
    i, j, k, l = q
    return (j, k, l, i)


def reverse(q: Quad) -> Quad:
    i, j, k, l = q
    return (l, k, j, i)


def dihedral_orbit(q: Quad) -> dict[Quad, int]:
    """Orbit of ``q`` under shift and reversal with the sign ``s`` of each
    member ``x`` such that ``q = x^s`` when each move contributes ``-1``."""
    orbit = {q: 1}
    todo = [q]
    while todo:
        x = todo.pop()
        for y in (shift(x), reverse(x)):
            if y not in orbit:
                orbit[y] = -orbit[x]
                todo.append(y)
    return orbit


def canonical_quad(q: Sequence[int], signed: bool = False) -> tuple[Quad, int]:
    """Lexicographically least label in the dihedral orbit of ``q``.

    Returns ``(c, s)`` with ``q = c^s`` in the signed setting; ``s`` is
    always ``+1`` when ``signed`` is false.
    """
    orbit = dihedral_orbit(tuple(q))  # type: ignore[arg-type]
    c = min(orbit)
    return c, (orbit[c] if signed else 1)


def canonical_quads(n: int) -> list[Quad]:
    return [q for q in itertools.permutations(range(1, n + 1), 4) if canonical_quad(q)[0] == q]


def pentagon_symbols(t: Sequence[int]) -> list[Quad]:
    """The five labels of the pentagon relator for the ordered 5-tuple ``t``."""
    i, j, k, l, m = t
    return [(i, j, k, l), (i, j, l, m), (j, k, l, m), (i, j, k, m), (i, k, l, m)]


PENTAGON_SIGNS = (1, 1, 1, 1, 1)
SIGNED_PENTAGON_SIGNS = (1, 1, 1, -1, -1)


def pentagon_orientations(s: Sequence[int]) -> list[tuple[int, ...]]:
    """Twelve representatives of the ordered 5-tuples on the set ``s`` modulo
    cyclic shift and reversal: least element first, second least element in
    the earlier of its two possible positions."""
    a, b = sorted(s)[:2]
    out = []
    for rest in itertools.permutations(sorted(set(s) - {a})):
        t = (a,) + rest
        pos = t.index(b)
        if pos in (1, 2):
            out.append(t)
    return out


def _intersect_small(a: Iterable[int], b: Iterable[int]) -> bool:
    return len(set(a) & set(b)) <= 2


def _check_n(n: int):
    if n < 4:
        raise ValueError(f"n must be at least 4, got {n}")


def _commutators(labels: Sequence[Quad], idx: dict[Quad, int]) -> list[Word]:
    by_set: dict[frozenset, list[Quad]] = {}
    for q in labels:
        by_set.setdefault(frozenset(q), []).append(q)
    sets = sorted(by_set, key=sorted)
    out = []
    for s, t in itertools.combinations(sets, 2):
        if len(s & t) > 2:
            continue
        for q in by_set[s]:
            a = idx[q]
            for r in by_set[t]:
                b = idx[r]
                lo, hi = min(a, b), max(a, b)
                out.append(Word._trusted((letter(lo, 1), letter(hi, 1), letter(lo, -1), letter(hi, -1))))
    return out


def build_gamma(n: int, mode: str = "full") -> Presentation:
    return _build_gamma_family(n, mode, signed=False)


def build_gamma_hat(n: int, mode: str = "full") -> Presentation:
    return _build_gamma_family(n, mode, signed=True)


def _build_gamma_family(n: int, mode: str, signed: bool) -> Presentation:
    _check_n(n)
    if mode not in ("full", "reduced"):
        raise ValueError(f"unknown mode {mode!r}")
    family = "gamma_hat" if signed else "gamma"
    psigns = SIGNED_PENTAGON_SIGNS if signed else PENTAGON_SIGNS
    rels: list[Word] = []
    kinds: list[str] = []

    if mode == "full":
        labels = list(itertools.permutations(range(1, n + 1), 4))
        idx = {q: i for i, q in enumerate(labels)}
        if not signed:
            for i in range(len(labels)):
                rels.append(Word._trusted((letter(i), letter(i))))
                kinds.append("involutive")
        comm = _commutators(labels, idx)
        rels += comm
        kinds += ["commutative"] * len(comm)
        for t in itertools.permutations(range(1, n + 1), 5):
            rels.append(Word(letter(idx[q], s) for q, s in zip(pentagon_symbols(t), psigns)))
            kinds.append("pentagon")
        e = 1 if signed else -1
        for q in labels:
            for y in (shift(q), reverse(q)):
                rels.append(Word((letter(idx[q]), letter(idx[y], e))))
                kinds.append("dihedral")
    else:
        labels = canonical_quads(n)
        idx = {q: i for i, q in enumerate(labels)}

        def sym(q):
            c, s = canonical_quad(q, signed)
            return letter(idx[c], s)

        if not signed:
            for i in range(len(labels)):
                rels.append(Word._trusted((letter(i), letter(i))))
                kinds.append("involutive")
        comm = _commutators(labels, idx)
        rels += comm
        kinds += ["commutative"] * len(comm)
        for s5 in itertools.combinations(range(1, n + 1), 5):
            tuples = pentagon_orientations(s5) if not signed else itertools.permutations(s5)
            for t in tuples:
                w = Word(letter(g, s * e) for (g, s), e in
                         zip((sym(q) for q in pentagon_symbols(t)), psigns))
                if w:
                    rels.append(w)
                    kinds.append("pentagon")
    names = tuple(quad_name(q, n) for q in labels)
    return Presentation(names, tuple(rels), Meta(family, n, mode), tuple(kinds))


def build_delta(n: int, hat: bool = False) -> Presentation:
    _check_n(n)
    labels = list(itertools.combinations(range(1, n + 1), 4))
    idx = {q: i for i, q in enumerate(labels)}
    psigns = SIGNED_PENTAGON_SIGNS if hat else PENTAGON_SIGNS
    rels: list[Word] = []
    kinds: list[str] = []
    if not hat:
        for i in range(len(labels)):
            rels.append(Word._trusted((letter(i), letter(i))))
            kinds.append("involutive")
    comm = _commutators(labels, idx)
    rels += comm
    kinds += ["commutative"] * len(comm)
    for t in itertools.combinations(range(1, n + 1), 5):
        rels.append(Word(letter(idx[q], s) for q, s in zip(pentagon_symbols(t), psigns)))
        kinds.append("pentagon")
    names = tuple(quad_name(q, n) for q in labels)
    return Presentation(names, tuple(rels), Meta("delta_hat" if hat else "delta", n, "full"), tuple(kinds))


def build(family: str, n: int, mode: str = "full") -> Presentation:
    if family == "gamma":
        return build_gamma(n, mode)
    if family == "gamma_hat":
        return build_gamma_hat(n, mode)
    if family in ("delta", "delta_hat"):
        if mode != "full":
            raise ValueError("delta families have no reduced mode")
        return build_delta(n, hat=family == "delta_hat")
    raise ValueError(f"unknown family {family!r}")


@lru_cache(maxsize=8)
def cached_build(family: str, n: int, mode: str = "full") -> Presentation:
    return build(family, n, mode)


def delta5_rewritten() -> Presentation:
    """Four-generator presentation of the n = 5 increasing-order group."""
    from .presentation import presentation

    a, b, c, d = "(1245)", "(1234)", "(1345)", "(1235)"
    rels = [f"{x} {x}" for x in (a, b, c, d)] + [f"{a} {b} {c} {d} {a} {b} {c} {d}"]
    return presentation([a, b, c, d], rels, family="delta", n=5)


def double_cover_presentation() -> Presentation:
    """``<a, b, c | acac, (b c^-1 b^-1 a^-1)^2>``, the index two subgroup."""
    from .presentation import presentation

    return presentation(["a", "b", "c"],
                        ["a c a c", "b c^-1 b^-1 a^-1 b c^-1 b^-1 a^-1"])


# ---------------------------------------------------------------------------
# minimal generating sets

def n_gens_count(n: int) -> int:
    """Minimal number of generators of the gamma families: C(n,3) - 1."""
    return comb(n, 3) - 1


def n_gens_closed_form(n: int) -> int:
    num = (n - 3) * (n * n + 2)
    assert num % 6 == 0
    return num // 6


def lambda_generators(n: int, family: str = "gamma") -> list[Quad]:
    """Minimal generating set: (123k); (1i2k), i<k; (1ijk), i<k<j.  For the
    delta families the labels (1jkl) with j<k<l."""
    _check_n(n)
    if family in ("delta", "delta_hat"):
        return [(1, j, k, l) for j, k, l in itertools.combinations(range(2, n + 1), 3)]
    if family not in ("gamma", "gamma_hat"):
        raise ValueError(f"unknown family {family!r}")
    g1 = [(1, 2, 3, k) for k in range(4, n + 1)]
    g2 = [(1, i, 2, k) for i, k in itertools.combinations(range(3, n + 1), 2)]
    g3 = sorted((1, i, j, k) for i in range(2, n + 1) for k in range(i + 1, n + 1)
                for j in range(k + 1, n + 1))
    return g1 + g2 + g3
