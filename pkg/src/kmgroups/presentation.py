"""Finite group presentations, their abelianized relation matrices and
Tietze simplification."""
from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Sequence

from .lattice import SparseIntMatrix
from .words import Word, cyclic_normal_form, cyclic_reduce, format_word, invert, letter, parse_word

FAMILIES = ("gamma", "gamma_hat", "delta", "delta_hat", "custom")
MODES = ("full", "reduced")


@dataclass(frozen=True)
class Meta:
    family: str = "custom"
    n: int | None = None
    mode: str = "full"

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]
    meta: Meta = field(default_factory=Meta)
    # optional per-relator kind labels ("involutive", "pentagon", ...)
    kinds: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(Word(r) for r in self.relators))
        object.__setattr__(self, "kinds", tuple(self.kinds))

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.generators)}

    def word(self, text: str) -> Word:
        return parse_word(text, self.index())

    def format(self, w: Sequence) -> str:
        return format_word(w, self.generators)

    def count(self, kind: str) -> int:
        return sum(1 for k in self.kinds if k == kind)

    def __repr__(self) -> str:
        return (f"Presentation({self.meta.family}, n={self.meta.n}, mode={self.meta.mode}, "
                f"{self.ngens} generators, {len(self.relators)} relators)")


def presentation(generators: Sequence[str], relators: Sequence[str], **meta) -> Presentation:
    """Build a presentation from relator strings in word syntax."""
    idx = {nm: i for i, nm in enumerate(generators)}
    return Presentation(tuple(generators), tuple(parse_word(r, idx) for r in relators), Meta(**meta))


def validate(p: Presentation) -> list[str]:
    """Human readable list of invariant violations; empty when ``p`` is sound."""
    out = []
    if len(set(p.generators)) != len(p.generators):
        out.append("duplicate generator names")
    for name in p.generators:
        if not name or any(ch.isspace() for ch in name) or name == "1" or name.endswith("^-1"):
            out.append(f"generator name {name!r} is not a single word token")
    g = p.ngens
    for i, r in enumerate(p.relators):
        bad = sorted({x for x, _ in r if x >= g})
        if bad:
            out.append(f"relator {i} references undeclared generator ids {bad}")
        if not r:
            out.append(f"relator {i} is redundant: it freely reduces to the identity")
    if p.kinds and len(p.kinds) != len(p.relators):
        out.append("kind labels do not match relator count")
    return out


def abelianized_relation_matrix(p: Presentation) -> SparseIntMatrix:
    """One row per relator, one column per generator; entries are exponent sums."""
    ent = {}
    for i, r in enumerate(p.relators):
        for g, e in r.exponent_sums().items():
            ent[(i, g)] = e
    return SparseIntMatrix(len(p.relators), p.ngens, ent)


# ---------------------------------------------------------------------------
# Tietze moves

@dataclass(frozen=True)
class TietzeMove:
    kind: str  # "drop_trivial" | "drop_duplicate" | "eliminate"
    detail: str


def tietze_simplify(p: Presentation, max_rounds: int = 100,
                    max_relator_length: int | None = None) -> tuple[Presentation, list[TietzeMove]]:
    """Simplify ``p`` with isomorphism preserving Tietze moves.

    Each round drops relators that are cyclically trivial or duplicate another
    relator up to rotation and inversion, then eliminates generators one at a
    time: a generator occurring exactly once in some cyclically reduced relator
    ``g w`` is replaced by ``w^-1`` everywhere and dropped together with that
    relator.  Among eligible pairs the one with least total letter growth
    wins, then the lowest generator id.  ``max_relator_length`` bounds the
    length of relators used for elimination (``2`` restricts to renamings).
    """
    if max_rounds < 1:
        raise ValueError("max_rounds must be positive")
    names = list(p.generators)
    alive = [True] * len(names)
    rels: dict[int, Word] = {i: cyclic_reduce(r)[0] for i, r in enumerate(p.relators)}
    kinds = dict(enumerate(p.kinds)) if p.kinds else {}
    log: list[TietzeMove] = []

    occ: dict[int, set[int]] = defaultdict(set)
    total: dict[int, int] = defaultdict(int)  # letters on each generator
    for i, r in rels.items():
        for g, _ in r:
            occ[g].add(i)
            total[g] += 1

    # cyclic normal form of each relator and the relator owning each form
    key_of: dict[int, tuple] = {}
    owner: dict[tuple, int] = {}
    dirty: set[int] = set(rels)

    def drop(i: int):
        for g, _ in rels[i]:
            occ[g].discard(i)
            total[g] -= 1
        del rels[i]
        k = key_of.pop(i, None)
        if k is not None and owner.get(k) == i:
            del owner[k]
        dirty.discard(i)

    def cleanup() -> bool:
        """Drop trivial and duplicate relators among those changed since the
        last call; of two equal relators the lower index survives."""
        changed = False
        for i in sorted(dirty):
            if i not in rels:
                continue
            r = rels[i]
            old = key_of.pop(i, None)
            if old is not None and owner.get(old) == i:
                del owner[old]
            if not r:
                drop(i)
                log.append(TietzeMove("drop_trivial", f"relator {i}"))
                changed = True
                continue
            key = cyclic_normal_form(r)
            j = owner.get(key)
            if j is not None:
                lo, hi = min(i, j), max(i, j)
                key_of[i] = key
                drop(hi)
                owner[key] = lo
                key_of[lo] = key
                log.append(TietzeMove("drop_duplicate", f"relator {hi} repeats relator {lo}"))
                changed = True
            else:
                owner[key] = i
                key_of[i] = key
        dirty.clear()
        return changed

    def best_elimination():
        best = None
        for i, r in rels.items():
            L = len(r)
            if max_relator_length is not None and L > max_relator_length:
                continue
            counts: dict[int, int] = defaultdict(int)
            for g, _ in r:
                counts[g] += 1
            for g, c in counts.items():
                if c != 1:
                    continue
                others = total[g] - 1
                growth = others * (L - 2) - L
                key = (growth, g, i)
                if best is None or key < best:
                    best = key
        return best

    for _ in range(max_rounds):
        changed = cleanup()
        while True:
            choice = best_elimination()
            if choice is None:
                break
            _, g, i = choice
            r = rels[i]
            k = next(t for t, (x, _) in enumerate(r) if x == g)
            rot = tuple(r[k:]) + tuple(r[:k])
            rest = Word(rot[1:])
            # g^e * rest = 1  =>  g = rest^-1 (e = 1) or g = rest (e = -1)
            repl = invert(rest) if rot[0][1] > 0 else rest
            repl_inv = invert(repl)
            drop(i)
            for j in list(occ[g]):
                old = rels[j]
                new: list = []
                for x, s in old:
                    if x == g:
                        new.extend(repl if s > 0 else repl_inv)
                    else:
                        new.append(letter(x, s))
                for x, _ in old:
                    occ[x].discard(j)
                    total[x] -= 1
                nw = cyclic_reduce(Word(new))[0]
                rels[j] = nw
                dirty.add(j)
                for x, _ in nw:
                    occ[x].add(j)
                    total[x] += 1
            alive[g] = False
            log.append(TietzeMove("eliminate", f"{names[g]} = {format_word(repl, names)}"))
            changed = True
            cleanup()
        if not changed:
            break

    keep = [g for g in range(len(names)) if alive[g]]
    renum = {g: i for i, g in enumerate(keep)}
    order = sorted(rels)
    new_rels = tuple(Word._trusted(tuple(letter(renum[x], s) for x, s in rels[i])) for i in order)
    new_kinds = tuple(kinds[i] for i in order) if kinds else ()
    out = Presentation(tuple(names[g] for g in keep), new_rels, p.meta, new_kinds)
    return out, log


# ---------------------------------------------------------------------------
# file formats

def to_text(p: Presentation) -> str:
    m = p.meta
    lines = [f"# family={m.family} n={m.n if m.n is not None else '-'} mode={m.mode}"]
    lines += [f"gen {g}" for g in p.generators]
    lines += [f"rel {p.format(r)}" for r in p.relators]
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Presentation:
    meta: dict = {}
    gens: list[str] = []
    rels: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            for tok in line[1:].split():
                if "=" in tok:
                    k, v = tok.split("=", 1)
                    meta[k] = v
            continue
        head, _, rest = line.partition(" ")
        if head == "gen":
            gens.append(rest.strip())
        elif head == "rel":
            rels.append(rest)
        else:
            raise ValueError(f"line {lineno}: expected 'gen' or 'rel', got {head!r}")
    n = meta.get("n")
    return presentation(gens, rels, family=meta.get("family", "custom"),
                        n=int(n) if n not in (None, "-") else None, mode=meta.get("mode", "full"))


def to_json(p: Presentation) -> str:
    m = p.meta
    return json.dumps({
        "family": m.family, "n": m.n, "mode": m.mode,
        "generators": list(p.generators),
        "relators": [[[g, s] for g, s in r] for r in p.relators],
    })


def from_json(text: str) -> Presentation:
    d = json.loads(text)
    rels = tuple(Word(tuple(letter(int(g), int(s)) for g, s in r)) for r in d["relators"])
    return Presentation(tuple(d["generators"]), rels,
                        Meta(d.get("family", "custom"), d.get("n"), d.get("mode", "full")))


def save(p: Presentation, path) -> None:
    path = Path(path)
    path.write_text(to_json(p) if path.suffix == ".json" else to_text(p))


def load(path) -> Presentation:
    path = Path(path)
    text = path.read_text()
    return from_json(text) if path.suffix == ".json" else from_text(text)


def with_relators(p: Presentation, relators: Sequence[Word]) -> Presentation:
    return replace(p, relators=tuple(relators), kinds=())
