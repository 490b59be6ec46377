"""Characters of symmetric groups on the classes of S_n.

Classes are indexed by partitions (cycle types).  Class functions hold one
exact integer per partition in the order of :func:`partitions`.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Callable, Sequence


class Partition(tuple):
    """Weakly decreasing tuple of positive parts."""

    def __new__(cls, parts: Sequence[int]):
        parts = tuple(int(x) for x in parts)
        if any(x <= 0 for x in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if list(parts) != sorted(parts, reverse=True):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    def mult(self, k: int) -> int:
        """``i_k``: how many parts equal ``k``."""
        return self.count(k)

    def __repr__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order, ``[n]`` first."""
    if n < 1:
        raise ValueError("n must be positive")

    def gen(rest: int, cap: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(Partition(p) for p in gen(n, n))


def class_size(lam: Sequence[int]) -> int:
    c = Counter(lam)
    return factorial(sum(lam)) // prod(k ** m * factorial(m) for k, m in c.items())


def chi_subsets(lam: Sequence[int], k: int) -> int:
    """Number of k-subsets fixed setwise by a permutation of cycle type
    ``lam``: choices of whole cycles whose lengths add up to ``k``."""
    n = sum(lam)
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in 0..{n}")
    ways = [1] + [0] * k
    for part in lam:
        for s in range(k, part - 1, -1):
            ways[s] += ways[s - part]
    return ways[k]


IRREP_LABELS = ("[n]", "[n-1,1]", "[n-2,2]", "[n-3,3]")


def chi_irrep(label: str, lam: Sequence[int]) -> int:
    """Closed formulas in the cycle counts ``i_k``; evaluated verbatim even
    when ``[n-3,3]`` is not a diagram (n = 5)."""
    c = Counter(lam)
    i1, i2, i3 = c[1], c[2], c[3]
    if label == "[n]":
        return 1
    if label == "[n-1,1]":
        return i1 - 1
    if label == "[n-2,2]":
        return i2 + i1 * (i1 - 3) // 2
    if label == "[n-3,3]":
        return i3 + i2 * (i1 - 1) + comb(i1, 3) - comb(i1, 2)
    raise ValueError(f"unknown label {label!r}; expected one of {IRREP_LABELS}")


def label_diagram(label: str, n: int) -> Partition | None:
    """The diagram for a label at ``n``, or None when it is not a partition."""
    k = {"[n]": 0, "[n-1,1]": 1, "[n-2,2]": 2, "[n-3,3]": 3}[label]
    if k == 0:
        return Partition((n,))
    if n - k < k:
        return None
    return Partition((n - k, k))


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama oracle

def _beta_set(diagram: Sequence[int]) -> tuple[int, ...]:
    m = len(diagram)
    return tuple(sorted((part + m - 1 - i for i, part in enumerate(diagram)), reverse=True))


@lru_cache(maxsize=None)
def _mn(beta: tuple[int, ...], lam: tuple[int, ...]) -> int:
    if not lam:
        return 1
    r, rest = lam[0], lam[1:]
    total = 0
    bset = set(beta)
    for b in beta:
        if b - r >= 0 and b - r not in bset:
            # removing a rim hook of length r; its height is the number of
            # beads strictly between b - r and b
            height = sum(1 for x in beta if b - r < x < b)
            nb = tuple(sorted((x if x != b else b - r for x in beta), reverse=True))
            total += (-1) ** height * _mn(nb, rest)
    return total


def chi_mn(diagram: Sequence[int], lam: Sequence[int]) -> int:
    if sum(diagram) != sum(lam):
        raise ValueError("diagram and class must be partitions of the same n")
    return _mn(_beta_set(tuple(diagram)), tuple(sorted(lam, reverse=True)))


def hook_dim(diagram: Sequence[int]) -> int:
    diagram = Partition(diagram)
    conj = [sum(1 for p in diagram if p > j) for j in range(diagram[0])] if diagram else []
    hooks = prod(diagram[i] - j + conj[j] - i - 1 for i in range(len(diagram)) for j in range(diagram[i]))
    return factorial(diagram.n) // hooks


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClassFunction:
    n: int
    values: tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        if len(self.values) != len(partitions(self.n)):
            raise ValueError("one value per partition of n is required")

    @classmethod
    def from_function(cls, n: int, f: Callable[[Partition], int], name: str = "") -> "ClassFunction":
        return cls(n, tuple(int(f(lam)) for lam in partitions(n)), name)

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        if self.n != other.n:
            raise ValueError("class functions on different S_n")
        return ClassFunction(self.n, tuple(a + b for a, b in zip(self.values, other.values)),
                             f"{self.name}+{other.name}")

    def __eq__(self, other) -> bool:
        return isinstance(other, ClassFunction) and (self.n, self.values) == (other.n, other.values)

    def __hash__(self):
        return hash((self.n, self.values))

    def to_dict(self) -> dict:
        return {"name": self.name, "n": self.n,
                "classes": [list(lam) for lam in partitions(self.n)], "values": list(self.values)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "ClassFunction":
        d = json.loads(text)
        if [tuple(c) for c in d["classes"]] != [tuple(p) for p in partitions(d["n"])]:
            raise ValueError("class order does not match")
        return cls(d["n"], tuple(d["values"]), d.get("name", ""))


def chi_subset_function(n: int, k: int) -> ClassFunction:
    return ClassFunction.from_function(n, lambda lam: chi_subsets(lam, k), f"chi{k}")


def irrep_function(label: str, n: int) -> ClassFunction:
    return ClassFunction.from_function(n, lambda lam: chi_irrep(label, lam), label)


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    if f.n != g.n:
        raise ValueError("class functions on different S_n")
    total = sum(class_size(lam) * a * b for lam, a, b in zip(partitions(f.n), f.values, g.values))
    return Fraction(total, factorial(f.n))
