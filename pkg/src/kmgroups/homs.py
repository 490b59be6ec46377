"""Homomorphisms from the quadruple-labelled groups to abelian groups.

Vectors live in the free abelian group on k-subsets of {1..n}, ordered
lexicographically.  Images are integer numpy arrays; all arithmetic is exact
(entries stay tiny, far from int64 limits).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Sequence

import numpy as np

from .groups import Quad, quads_of
from .lattice import SparseIntMatrix, smith_normal_form
from .presentation import Presentation, abelianized_relation_matrix


@dataclass(frozen=True)
class SubsetBasis:
    n: int
    k: int

    @property
    def subsets(self) -> list[tuple[int, ...]]:
        return _subsets(self.n, self.k)

    def __len__(self) -> int:
        return comb(self.n, self.k)

    def index(self, s) -> int:
        return _subset_index(self.n, self.k)[tuple(sorted(s))]


@lru_cache(maxsize=None)
def _subsets(n: int, k: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(1, n + 1), k))


@lru_cache(maxsize=None)
def _subset_index(n: int, k: int) -> dict[tuple[int, ...], int]:
    return {s: i for i, s in enumerate(_subsets(n, k))}


def basis_vector(n: int, s) -> np.ndarray:
    v = np.zeros(comb(n, len(s)), dtype=np.int64)
    v[_subset_index(n, len(s))[tuple(sorted(s))]] = 1
    return v


def phi3(q: Sequence[int], n: int) -> np.ndarray:
    """{i,j,k} - {i,j,l} + {i,k,l} - {j,k,l} for the label (ijkl)."""
    i, j, k, l = q
    ix = _subset_index(n, 3)
    v = np.zeros(comb(n, 3), dtype=np.int64)
    for s, c in (((i, j, k), 1), ((i, j, l), -1), ((i, k, l), 1), ((j, k, l), -1)):
        v[ix[tuple(sorted(s))]] += c
    return v


def phi2(q: Sequence[int], n: int) -> np.ndarray:
    """{i,k} - {j,l} for the label (ijkl)."""
    i, j, k, l = q
    ix = _subset_index(n, 2)
    v = np.zeros(comb(n, 2), dtype=np.int64)
    v[ix[tuple(sorted((i, k)))]] += 1
    v[ix[tuple(sorted((j, l)))]] -= 1
    return v


def eta3(v: Sequence[int], n: int) -> np.ndarray:
    """Linear map sending {i,j,k} to {i,j} + {j,k} + {k,i}."""
    v = np.asarray(v, dtype=np.int64)
    if v.shape != (comb(n, 3),):
        raise ValueError(f"expected a vector of length {comb(n, 3)}, got shape {v.shape}")
    ix = _subset_index(n, 2)
    out = np.zeros(comb(n, 2), dtype=np.int64)
    for c, (i, j, k) in zip(v, _subsets(n, 3)):
        if c:
            out[ix[(i, j)]] += c
            out[ix[(j, k)]] += c
            out[ix[(i, k)]] += c
    return out


def eta3_matrix(n: int) -> np.ndarray:
    return np.stack([eta3(row, n) for row in np.eye(comb(n, 3), dtype=np.int64)]).T


def evaluate(word, labels: Sequence[Quad], f, n: int) -> np.ndarray:
    """Extend a label map ``f(q, n)`` to a word by linearity."""
    out = None
    for g, s in word:
        v = s * f(labels[g], n)
        out = v if out is None else out + v
    if out is None:
        out = np.zeros_like(f(labels[0], n)) if labels else np.zeros(0, dtype=np.int64)
    return out


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AbelianHom:
    """Generator images in ``Z/m_1 + ... + Z/m_d`` (``m = 0`` means Z).

    ``images`` has one row per generator of the source presentation.
    """

    name: str
    images: np.ndarray
    moduli: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.moduli)

    @property
    def modulus(self) -> int | None:
        """The common modulus when all coordinates share one."""
        ms = set(self.moduli)
        return ms.pop() if len(ms) == 1 else None

    @property
    def is_finite(self) -> bool:
        return all(m > 0 or not self.images[:, i].any() for i, m in enumerate(self.moduli))

    def reduce(self, v: np.ndarray) -> np.ndarray:
        v = np.array(v, dtype=np.int64)
        for i, m in enumerate(self.moduli):
            if m:
                v[..., i] %= m
        return v

    def __call__(self, word) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        for g, s in word:
            v += s * self.images[g]
        return self.reduce(v)


def _hom(name: str, rows: list[np.ndarray], moduli: Sequence[int]) -> AbelianHom:
    images = np.stack(rows) if rows else np.zeros((0, len(moduli)), dtype=np.int64)
    h = AbelianHom(name, images, tuple(moduli))
    return AbelianHom(name, h.reduce(images), tuple(moduli))


def make_hom(name: str, p: Presentation) -> AbelianHom:
    """Registry: ``phi3``, ``phi2``, ``phi3_mod2``, ``phi2_mod2``, ``nu``,
    ``eps_all_ones``, ``abelianization``, ``trivial``."""
    n = p.meta.n
    if name in ("phi3", "phi2", "phi3_mod2", "phi2_mod2", "nu"):
        labels = quads_of(p)
        if name == "nu":
            if n != 5 or p.meta.family != "gamma":
                raise ValueError("nu is defined on the n = 5 gamma group")
            return _hom(name, [np.array([int(1 in q)]) for q in labels], (2,))
        f = phi3 if name.startswith("phi3") else phi2
        rows = [f(q, n) for q in labels]
        m = 2 if name.endswith("mod2") else 0
        return _hom(name, rows, (m,) * len(rows[0]))
    if name == "eps_all_ones":
        return eps_all_ones(p)
    if name == "abelianization":
        return abelianization_hom(p)
    if name == "trivial":
        return trivial_hom(p)
    raise ValueError(f"unknown homomorphism {name!r}")


HOM_NAMES = ("phi3", "phi2", "phi3_mod2", "phi2_mod2", "nu", "eps_all_ones", "abelianization", "trivial")


def eps_all_ones(p: Presentation) -> AbelianHom:
    """Every generator to 1 in Z/2.

    On the full delta presentations the pentagons have odd length, so there
    the map is taken on the generating set ``(1jkl)`` and pulled back: a label
    goes to 1 exactly when it contains 1.  For n = 5 this agrees with the
    all-ones map on the rewritten four generator presentation.
    """
    h = _hom("eps_all_ones", [np.array([1])] * p.ngens, (2,))
    if p.meta.family in ("delta", "delta_hat") and check_well_defined(h, p):
        h = _hom("eps_all_ones", [np.array([int(1 in q)]) for q in quads_of(p)], (2,))
    return h


def abelianization_hom(p: Presentation) -> AbelianHom:
    """Quotient map onto H1 written as ``Z^r + Z/d_1 + ...``.

    With ``U R V = D`` for the relation matrix ``R`` the row space of ``R`` is
    carried onto that of ``D`` by ``x -> x V``, so generator ``j`` maps to row
    ``j`` of ``V``.  Coordinates carrying invariant factor 1 are dropped.
    """
    res = smith_normal_form(abelianized_relation_matrix(p), transforms=True)
    g = p.ngens
    factors = list(res.factors) + [0] * (g - res.rank)
    keep = [i for i, d in enumerate(factors) if d != 1]
    rows = [np.array([res.V[j][i] for i in keep], dtype=np.int64) for j in range(g)]
    return _hom("abelianization", rows, [factors[i] for i in keep])


def check_well_defined(h: AbelianHom, p: Presentation) -> list[int]:
    """Indices of relators of ``p`` whose image under ``h`` is nonzero."""
    if len(h.images) != p.ngens:
        raise ValueError("homomorphism and presentation disagree on generator count")
    return [i for i, r in enumerate(p.relators) if h(r).any()]


def nu(word, p: Presentation) -> int:
    """Parity of the number of letters whose label contains 1."""
    return int(make_hom("nu", p)(word)[0])


def image_matrix(h: AbelianHom) -> SparseIntMatrix:
    return SparseIntMatrix.from_dense(h.images.tolist(), cols=h.dim)


def trivial_hom(p: Presentation) -> AbelianHom:
    """Everything to zero; its kernel is the whole group."""
    return _hom("trivial", [np.zeros(1, dtype=np.int64)] * p.ngens, (2,))
