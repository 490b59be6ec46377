"""Exact sparse integer linear algebra.

Smith normal form over the integers, ranks over prime fields, abelian group
invariants of presentations and lattices, and simplicial boundary matrices.
Everything here uses Python integers; nothing is floating point.
"""
from __future__ import annotations

import heapq
import itertools
import re
from collections import defaultdict
from dataclasses import dataclass
from math import comb, gcd
from typing import Callable, Iterable, Mapping, Sequence

Progress = Callable[[int, int], None]

# above this many nonzeros the mod-p rank screen runs next to the SNF
SCREEN_NNZ = 200_000


class SparseIntMatrix:
    """Integer matrix stored as a map ``(row, col) -> value`` of nonzeros."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Mapping[tuple[int, int], int] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("negative dimension")
        self.rows = rows
        self.cols = cols
        clean: dict[tuple[int, int], int] = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError(f"entry {(r, c)} outside {rows}x{cols}")
            if v:
                clean[(r, c)] = int(v)
        self._entries = clean

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[int]], cols: int | None = None) -> "SparseIntMatrix":
        rows = len(data)
        if cols is None:
            cols = len(data[0]) if rows else 0
        ent = {}
        for i, row in enumerate(data):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                if v:
                    ent[(i, j)] = int(v)
        return cls(rows, cols, ent)

    @classmethod
    def from_row_dicts(cls, rows: Sequence[Mapping[int, int]], cols: int) -> "SparseIntMatrix":
        ent = {(i, j): v for i, row in enumerate(rows) for j, v in row.items() if v}
        return cls(len(rows), cols, ent)

    @property
    def entries(self) -> Mapping[tuple[int, int], int]:
        return dict(self._entries)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def nnz(self) -> int:
        return len(self._entries)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self._entries.get(key, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __repr__(self) -> str:
        return f"SparseIntMatrix({self.rows}x{self.cols}, nnz={self.nnz})"

    def row_dicts(self) -> list[dict[int, int]]:
        out: list[dict[int, int]] = [{} for _ in range(self.rows)]
        for (r, c), v in self._entries.items():
            out[r][c] = v
        return out

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self._entries.items():
            out[r][c] = v
        return out

    def transpose(self) -> "SparseIntMatrix":
        return SparseIntMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self._entries.items()})

    def __matmul__(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        right = other.row_dicts()
        acc: dict[tuple[int, int], int] = defaultdict(int)
        for (r, k), v in self._entries.items():
            for c, w in right[k].items():
                acc[(r, c)] += v * w
        return SparseIntMatrix(self.rows, other.cols, acc)

    def vstack(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch")
        ent = dict(self._entries)
        ent.update({(r + self.rows, c): v for (r, c), v in other._entries.items()})
        return SparseIntMatrix(self.rows + other.rows, self.cols, ent)

    def hstack(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch")
        ent = dict(self._entries)
        ent.update({(r, c + self.cols): v for (r, c), v in other._entries.items()})
        return SparseIntMatrix(self.rows, self.cols + other.cols, ent)


# ---------------------------------------------------------------------------
# abelian groups

_TERM = re.compile(r"^(?:\(Z/(\d+)\)\^(\d+)|Z/(\d+)|Z\^(\d+)|Z)$")


@dataclass(frozen=True)
class AbelianInvariants:
    """``Z^free_rank`` plus cyclic torsion factors ``d1 | d2 | ...``."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        if any(d < 2 for d in self.torsion):
            raise ValueError(f"torsion factors must be >= 2: {self.torsion}")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"divisibility chain broken: {self.torsion}")

    @classmethod
    def from_factors(cls, ncols: int, factors: Iterable[int]) -> "AbelianInvariants":
        """Cokernel of a matrix with ``ncols`` columns and the given invariant factors."""
        factors = [abs(f) for f in factors if f]
        return cls(ncols - len(factors), tuple(sorted(f for f in factors if f > 1)))

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def __str__(self) -> str:
        terms = []
        if self.free_rank == 1:
            terms.append("Z")
        elif self.free_rank:
            terms.append(f"Z^{self.free_rank}")
        for d, grp in itertools.groupby(self.torsion):
            k = len(list(grp))
            terms.append(f"Z/{d}" if k == 1 else f"(Z/{d})^{k}")
        return " + ".join(terms) if terms else "0"

    def expanded(self) -> str:
        """Serialise as ``Z^r + Z/d1 + Z/d2 + ...``."""
        terms = [f"Z^{self.free_rank}"] if self.free_rank else []
        terms += [f"Z/{d}" for d in self.torsion]
        return " + ".join(terms) if terms else "0"

    @classmethod
    def parse(cls, text: str) -> "AbelianInvariants":
        text = text.strip()
        if text in ("0", "1", ""):
            return cls(0, ())
        free = 0
        tors: list[int] = []
        for term in text.split("+"):
            m = _TERM.match(term.strip().replace(" ", ""))
            if not m:
                raise ValueError(f"cannot parse abelian group term {term!r}")
            d_pow, k, d_one, r = m.groups()
            if d_pow:
                tors += [int(d_pow)] * int(k)
            elif d_one:
                tors.append(int(d_one))
            else:
                free += int(r) if r else 1
        # re-normalise arbitrary cyclic factors into a divisibility chain
        return cls.from_factors(free + len(tors), _normalise_cyclic(tors))


def _normalise_cyclic(orders: Sequence[int]) -> list[int]:
    if not orders:
        return []
    res = smith_normal_form(SparseIntMatrix(len(orders), len(orders),
                                            {(i, i): d for i, d in enumerate(orders)}))
    return list(res.factors)


# ---------------------------------------------------------------------------
# Smith normal form

@dataclass
class SmithResult:
    """Invariant factors ``d1 | d2 | ... | d_rank`` (all positive).

    With transforms, ``U @ m @ V`` equals the diagonal matrix carrying
    ``factors`` (rectangular, zero padded).
    """

    factors: tuple[int, ...]
    shape: tuple[int, int]
    U: list[list[int]] | None = None
    V: list[list[int]] | None = None

    @property
    def rank(self) -> int:
        return len(self.factors)

    def diagonal(self) -> list[list[int]]:
        r, c = self.shape
        out = [[0] * c for _ in range(r)]
        for i, d in enumerate(self.factors):
            out[i][i] = d
        return out


def _nearest_quotient(a: int, p: int) -> int:
    # rem shares the sign of p, so a - (q + 1) p = rem - p is the other
    # candidate remainder whatever that sign is
    q, rem = divmod(a, p)
    if 2 * abs(rem) > abs(p):
        q += 1
    return q


def _dense_snf(A: list[list[int]], U: list[list[int]] | None = None,
               V: list[list[int]] | None = None,
               progress: Progress | None = None) -> list[int]:
    """In-place Smith reduction of dense ``A``; optionally accumulates transforms.

    Returns the diagonal (positive, in divisibility order).
    """
    nr = len(A)
    nc = len(A[0]) if nr else 0
    diag: list[int] = []
    t = 0
    while t < min(nr, nc):
        best = None
        for i in range(t, nr):
            row = A[i]
            for j in range(t, nc):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        _swap_rows(A, U, t, i)
        _swap_cols(A, V, t, j)
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, nr):
                a = A[i][t]
                if a:
                    q = _nearest_quotient(a, p)
                    _add_row(A, U, i, t, -q)
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, nc):
                a = A[t][j]
                if a:
                    q = _nearest_quotient(a, p)
                    _add_col(A, V, j, t, -q)
                    if A[t][j]:
                        dirty = True
            if dirty:
                # move the smallest leftover in row/column t onto the pivot
                cand = [(abs(A[i][t]), i, t) for i in range(t + 1, nr) if A[i][t]]
                cand += [(abs(A[t][j]), t, j) for j in range(t + 1, nc) if A[t][j]]
                _, i, j = min(cand)
                _swap_rows(A, U, t, i)
                _swap_cols(A, V, t, j)
                continue
            bad = None
            for i in range(t + 1, nr):
                row = A[i]
                for j in range(t + 1, nc):
                    if row[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            _add_row(A, U, t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            if U is not None:
                U[t] = [-x for x in U[t]]
        diag.append(A[t][t])
        t += 1
        if progress is not None:
            progress(t, min(nr, nc))
    return diag


def _swap_rows(A, U, a, b):
    if a != b:
        A[a], A[b] = A[b], A[a]
        if U is not None:
            U[a], U[b] = U[b], U[a]


def _swap_cols(A, V, a, b):
    if a != b:
        for row in A:
            row[a], row[b] = row[b], row[a]
        if V is not None:
            for row in V:
                row[a], row[b] = row[b], row[a]


def _add_row(A, U, dst, src, q):
    # row_dst += q * row_src
    rs, rd = A[src], A[dst]
    A[dst] = [x + q * y for x, y in zip(rd, rs)]
    if U is not None:
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]


def _add_col(A, V, dst, src, q):
    # col_dst += q * col_src
    for row in A:
        if row[src]:
            row[dst] += q * row[src]
    if V is not None:
        for row in V:
            if row[src]:
                row[dst] += q * row[src]


def _unit_pivot_eliminate(rows: list[dict[int, int]], ncols: int,
                          progress: Progress | None = None) -> int:
    """Eliminate +-1 pivots in place; returns how many were used.

    Column order follows current column counts (smallest first); within a
    column the shortest row carrying a unit entry is chosen.  After each pivot
    the pivot row and column are removed, which is valid because a unit pivot
    lets column operations clear its row without touching any other row.
    """
    colidx: dict[int, set[int]] = defaultdict(set)
    for r, row in enumerate(rows):
        for c in row:
            colidx[c].add(r)
    used = 0
    while True:
        heap = [(len(rs), c) for c, rs in colidx.items() if rs]
        heapq.heapify(heap)
        progressed = False
        while heap:
            cnt, c = heapq.heappop(heap)
            rs = colidx.get(c)
            if not rs:
                continue
            if len(rs) != cnt:
                heapq.heappush(heap, (len(rs), c))
                continue
            piv = -1
            plen = 0
            for r in rs:
                v = rows[r][c]
                if (v == 1 or v == -1) and (piv < 0 or len(rows[r]) < plen):
                    piv, plen = r, len(rows[r])
            if piv < 0:
                continue
            prow = rows[piv]
            u = prow[c]
            for r in list(rs):
                if r == piv:
                    continue
                row = rows[r]
                f = row[c] * u
                for cc, v in prow.items():
                    nv = row.get(cc, 0) - f * v
                    if nv:
                        if cc not in row:
                            colidx[cc].add(r)
                        row[cc] = nv
                    elif cc in row:
                        del row[cc]
                        colidx[cc].discard(r)
            for cc in prow:
                colidx[cc].discard(piv)
            rows[piv] = {}
            used += 1
            progressed = True
            if progress is not None and used % 256 == 0:
                progress(used, ncols)
        if not progressed:
            return used


def smith_normal_form(m: SparseIntMatrix, transforms: bool = False,
                      progress: Progress | None = None) -> SmithResult:
    """Invariant factors of ``m``; with ``transforms`` also unimodular U, V.

    ``progress(done, total)`` is called periodically; raising from it cancels
    the computation.
    """
    nr, nc = m.shape
    if transforms:
        A = m.to_dense()
        U = [[int(i == j) for j in range(nr)] for i in range(nr)]
        V = [[int(i == j) for j in range(nc)] for i in range(nc)]
        diag = _dense_snf(A, U, V, progress)
        return SmithResult(tuple(diag), (nr, nc), U, V)

    rows = m.row_dicts()
    units = _unit_pivot_eliminate(rows, nc, progress)
    rest = [row for row in rows if row]
    cols = sorted({c for row in rest for c in row})
    pos = {c: i for i, c in enumerate(cols)}
    dense = [[0] * len(cols) for _ in rest]
    for i, row in enumerate(rest):
        for c, v in row.items():
            dense[i][pos[c]] = v
    tail = _dense_snf(dense, progress=progress) if dense and cols else []
    factors = (1,) * units + tuple(tail)
    res = SmithResult(_fix_chain(factors), (nr, nc))
    if m.nnz > SCREEN_NNZ:
        consistency_screen(m, res)
    return res


def _fix_chain(factors: Sequence[int]) -> tuple[int, ...]:
    # unit pivots followed by a valid chain are already a chain; this guards
    # the concatenation anyway
    out = sorted(abs(f) for f in factors if f)
    for a, b in zip(out, out[1:]):
        if b % a:
            raise ArithmeticError(f"invariant factors lost divisibility: {out}")
    return tuple(out)


def consistency_screen(m: SparseIntMatrix, res: SmithResult, primes: Sequence[int] = (2, 3)) -> None:
    """Cross-check SNF factors against independent ranks over prime fields."""
    for p in primes:
        expect = sum(1 for d in res.factors if d % p)
        got = rank_mod_p(m, p)
        if got != expect:
            raise ArithmeticError(f"rank mod {p} is {got}, SNF implies {expect}")


def invariant_factors(m: SparseIntMatrix) -> tuple[int, ...]:
    return smith_normal_form(m).factors


def cokernel(m: SparseIntMatrix, progress: Progress | None = None) -> AbelianInvariants:
    """``Z^cols / rowspace(m)``."""
    return AbelianInvariants.from_factors(m.cols, smith_normal_form(m, progress=progress).factors)


# ---------------------------------------------------------------------------
# ranks

def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def rank_mod_p(m: SparseIntMatrix, p: int) -> int:
    """Rank of ``m`` over the field with ``p`` elements."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in m.row_dicts():
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                inv = pow(row[c], -1, p)
                pivots[c] = {cc: (v * inv) % p for cc, v in row.items()}
                rank += 1
                break
            f = row[c]
            for cc, v in prow.items():
                nv = (row.get(cc, 0) - f * v) % p
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
    return rank


def rank_over_q(m: SparseIntMatrix) -> int:
    return smith_normal_form(m).rank


# ---------------------------------------------------------------------------
# lattices and chain complexes

def lattice_image_invariants(vectors: Sequence[Sequence[int]], dim: int | None = None
                             ) -> tuple[AbelianInvariants, AbelianInvariants]:
    """Invariants of the lattice spanned by ``vectors`` and of ``Z^d`` modulo it."""
    vectors = [list(v) for v in vectors]
    if dim is None:
        if not vectors:
            raise ValueError("dimension required for an empty vector list")
        dim = len(vectors[0])
    if any(len(v) != dim for v in vectors):
        raise ValueError("dimension mismatch")
    m = SparseIntMatrix.from_dense(vectors, cols=dim)
    res = smith_normal_form(m)
    return AbelianInvariants(res.rank), AbelianInvariants.from_factors(dim, res.factors)


def subsets(n: int, k: int) -> list[tuple[int, ...]]:
    """k-subsets of {1..n} in lexicographic order."""
    return list(itertools.combinations(range(1, n + 1), k))


def simplex_boundary_matrix(n: int, k: int) -> SparseIntMatrix:
    """Matrix of the boundary map C_k -> C_{k-1} of the (n-1)-simplex.

    Columns are indexed by (k+1)-subsets of {1..n}, rows by k-subsets, both
    lexicographically; the face missing the i-th vertex carries sign (-1)^i.
    """
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must lie in 1..{n - 1}")
    faces = {s: i for i, s in enumerate(subsets(n, k))}
    ent = {}
    for j, simplex in enumerate(subsets(n, k + 1)):
        for i in range(k + 1):
            face = simplex[:i] + simplex[i + 1:]
            ent[(faces[face], j)] = (-1) ** i
    return SparseIntMatrix(comb(n, k), comb(n, k + 1), ent)


# ---------------------------------------------------------------------------
# presentations

def h1(p, progress: Progress | None = None) -> AbelianInvariants:
    """Abelianization of a finitely presented group."""
    from .presentation import abelianized_relation_matrix

    return cokernel(abelianized_relation_matrix(p), progress)


# ---------------------------------------------------------------------------
# MatrixMarket interchange

def write_matrix_market(m: SparseIntMatrix, path) -> None:
    with open(path, "w") as fh:
        fh.write("%%MatrixMarket matrix coordinate integer general\n")
        fh.write(f"{m.rows} {m.cols} {m.nnz}\n")
        for (r, c), v in sorted(m.entries.items()):
            fh.write(f"{r + 1} {c + 1} {v}\n")


def read_matrix_market(path) -> SparseIntMatrix:
    with open(path) as fh:
        header = fh.readline()
        if not header.startswith("%%MatrixMarket") or "coordinate" not in header or "integer" not in header:
            raise ValueError("expected an integer coordinate MatrixMarket file")
        line = fh.readline()
        while line.startswith("%"):
            line = fh.readline()
        rows, cols, nnz = (int(x) for x in line.split())
        ent = {}
        for _ in range(nnz):
            r, c, v = fh.readline().split()
            ent[(int(r) - 1, int(c) - 1)] = int(v)
    return SparseIntMatrix(rows, cols, ent)


def determinant(A: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    M = [list(r) for r in A]
    n = len(M)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            sw = next((i for i in range(k + 1, n) if M[i][k]), None)
            if sw is None:
                return 0
            M[k], M[sw] = M[sw], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def gcd_all(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
