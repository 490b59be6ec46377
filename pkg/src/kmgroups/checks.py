"""Verification suite: one check per acceptance criterion plus file checks.

Every check returns a :class:`CheckResult` whose ``data`` holds the computed
values next to the expected ones, so reports show what was compared.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from math import comb
from typing import Callable

import numpy as np

from . import groups, homs, lattice, rewrite, schreier, symchar
from .groups import build, cached_build, lambda_generators
from .lattice import AbelianInvariants, SparseIntMatrix, h1
from .presentation import Presentation, load, tietze_simplify
from .words import Word, letter


@dataclass
class CheckResult:
    name: str
    passed: bool
    data: dict = field(default_factory=dict)
    seconds: float = 0.0
    error: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "seconds": round(self.seconds, 3),
                "data": self.data, "error": self.error}


def _run(name: str, fn: Callable[[dict], bool]) -> CheckResult:
    data: dict = {}
    t0 = time.perf_counter()
    try:
        ok = bool(fn(data))
        err = ""
    except Exception as exc:  # reported as a failed check, not a crash
        ok, err = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(name, ok, data, time.perf_counter() - t0, err)


def _inv(free: int = 0, torsion=()) -> AbelianInvariants:
    return AbelianInvariants(free, tuple(torsion))


# ---------------------------------------------------------------------------
# 1. abelianizations

def check_abelianizations(ns=(4, 5, 6), include_slow: bool = False) -> CheckResult:
    def body(data):
        ok = True
        for n in ns:
            N = groups.n_gens_count(n)
            ok &= N == groups.n_gens_closed_form(n) == len(lambda_generators(n))
            for fam, want in (("gamma", _inv(0, (2,) * N)), ("gamma_hat", _inv(N))):
                t0 = time.perf_counter()
                got = h1(build(fam, n, "full"))
                dt = time.perf_counter() - t0
                data[f"{fam} n={n} full"] = {"h1": str(got), "expected": str(want), "seconds": round(dt, 2)}
                ok &= got == want and dt < 60
        if include_slow:
            N = groups.n_gens_count(7)
            for fam, want in (("gamma", _inv(0, (2,) * N)), ("gamma_hat", _inv(N))):
                t0 = time.perf_counter()
                got = h1(build(fam, 7, "reduced"))
                dt = time.perf_counter() - t0
                data[f"{fam} n=7 reduced"] = {"h1": str(got), "expected": str(want), "seconds": round(dt, 2)}
                ok &= got == want and dt < 600
        for n in range(4, 9):
            M = comb(n - 1, 3)
            for fam, want in (("delta", _inv(0, (2,) * M)), ("delta_hat", _inv(M))):
                got = h1(build(fam, n))
                data[f"{fam} n={n}"] = {"h1": str(got), "expected": str(want)}
                ok &= got == want
        return ok
    return _run("1 abelianizations", body)


# ---------------------------------------------------------------------------
# 2. lattice images of phi3

def phi3_vectors(n: int) -> list[np.ndarray]:
    return [homs.phi3(q, n) for q in lambda_generators(n)]


def check_lattice_images(ns=(4, 5, 6, 7)) -> CheckResult:
    def body(data):
        ok = True
        for n in ns:
            N = groups.n_gens_count(n)
            image, quotient = lattice.lattice_image_invariants([v.tolist() for v in phi3_vectors(n)], comb(n, 3))
            # the image over all generators is the same lattice
            full, _ = lattice.lattice_image_invariants(
                [homs.phi3(q, n).tolist() for q in groups.canonical_quads(n)], comb(n, 3))
            data[f"n={n}"] = {"image": str(image), "quotient": str(quotient), "all generators": str(full)}
            ok &= image == _inv(N) and full == image
            if n == 4:
                ok &= quotient == _inv(1, (2, 2))
            else:
                ok &= len(quotient.torsion) > 0
        return ok
    return _run("2 lattice images", body)


# ---------------------------------------------------------------------------
# 3. mod 2 ranks

def check_mod2_ranks(ns=range(4, 9)) -> CheckResult:
    def body(data):
        ok = True
        for n in ns:
            qs = groups.canonical_quads(n)
            m3 = SparseIntMatrix.from_dense([homs.phi3(q, n).tolist() for q in qs])
            m2 = SparseIntMatrix.from_dense([homs.phi2(q, n).tolist() for q in qs])
            r3 = lattice.rank_mod_p(m3, 2)
            r32 = lattice.rank_mod_p(m3.hstack(m2), 2)
            d3 = lattice.simplex_boundary_matrix(n, 3)
            rb = lattice.rank_mod_p(d3, 2)
            d4 = lattice.simplex_boundary_matrix(n, 4) if n >= 5 else None
            dd = d3 @ d4 if d4 is not None else None
            zero = dd is None or dd.nnz == 0
            data[f"n={n}"] = {"rank2 phi3": r3, "rank2 phi3+phi2": r32, "rank2 boundary": rb,
                              "expected": [comb(n - 1, 3), groups.n_gens_count(n)], "dd=0": zero}
            ok &= r3 == comb(n - 1, 3) == rb and r32 == groups.n_gens_count(n) and zero
        return ok
    return _run("3 mod-2 ranks", body)


# ---------------------------------------------------------------------------
# 4. Reidemeister-Schreier

def check_schreier(include_slow: bool = False) -> CheckResult:
    def body(data):
        p = cached_build("gamma", 5, "reduced")
        nu = homs.make_hom("nu", p)
        t = schreier.coset_table(p, nu)
        reps = schreier.schreier_transversal(t)
        rs = schreier.rs_presentation(p, t)
        simp, _ = tietze_simplify(rs.presentation, max_relator_length=2)
        t0 = time.perf_counter()
        got = schreier.h1_kernel(p, nu)
        dt = time.perf_counter() - t0
        data["theta"] = {"generators": p.ngens, "relators": len(p.relators)}
        data["transversal"] = [p.format(w) for w in reps]
        data["schreier generators"] = rs.presentation.ngens
        data["tau relators"] = rs.tau_relators
        data["simplified"] = {"generators": simp.ngens, "relators": len(simp.relators)}
        data["h1 kernel nu"] = str(got)
        data["seconds"] = round(dt, 2)
        ok = (p.ngens, len(p.relators)) == (15, 27) and data["transversal"] == ["1", "(1234)"]
        ok &= (simp.ngens, len(simp.relators)) == (17, 30)
        ok &= got == _inv(2, (2,) * 6) and dt < 10
        if include_slow:
            ab = homs.make_hom("abelianization", p)
            t0 = time.perf_counter()
            tab = schreier.coset_table(p, ab)
            big = schreier.h1_kernel(p, ab)
            dt = time.perf_counter() - t0
            data["h1 commutator subgroup"] = {"cosets": tab.index, "h1": str(big), "seconds": round(dt, 1)}
            ok &= tab.index == 512 and big == _inv(145, (2,) * 18) and dt < 1800
        return ok
    return _run("4 reidemeister-schreier", body)


# ---------------------------------------------------------------------------
# 5. delta_5

def check_delta5() -> CheckResult:
    def body(data):
        want = _inv(2, (2,))
        y = h1(groups.double_cover_presentation())
        d = build("delta", 5)
        k_full = schreier.h1_kernel(d, homs.make_hom("eps_all_ones", d))
        r = groups.delta5_rewritten()
        k_rew = schreier.h1_kernel(r, homs.make_hom("eps_all_ones", r))
        data.update({"explicit <a,b,c>": str(y), "kernel eps (full)": str(k_full),
                     "kernel eps (rewritten)": str(k_rew), "h1 rewritten": str(h1(r)),
                     "h1 full": str(h1(d))})
        return y == k_full == k_rew == want and h1(r) == h1(d)
    return _run("5 delta_5 double cover", body)


# ---------------------------------------------------------------------------
# 6. rewriting

def check_rewriting(ns=(5, 6, 7), families=("gamma_hat", "gamma")) -> CheckResult:
    def body(data):
        ok = True
        for fam in families:
            for n in ns:
                p = rewrite.family_presentation(fam, n)
                quads = groups.quads_of(p)
                lam = {quads.index(q) for q in lambda_generators(n, fam)}
                m = 2 if fam == "gamma" else 0
                bad = 0
                longest = 0
                for g, q in enumerate(quads):
                    w, cert = rewrite.rewrite_in_lambda(q, n, fam)
                    good = rewrite.verify_certificate(cert, p) and cert.start == Word.gen(g)
                    good &= all(x in lam for x, _ in w)
                    for f in (homs.phi3, homs.phi2):
                        a = homs.evaluate(w, quads, f, n) - f(q, n)
                        good &= not (a % m if m else a).any()
                    bad += not good
                    longest = max(longest, len(cert.moves))
                size = len(lam)
                data[f"{fam} n={n}"] = {"generators": len(quads), "failures": bad,
                                        "longest certificate": longest, "|Lambda|": size}
                ok &= bad == 0 and size == groups.n_gens_count(n)
        return ok
    return _run("6 rewriting", body)


# ---------------------------------------------------------------------------
# 7. characters

def check_characters(ns=range(5, 11)) -> CheckResult:
    def body(data):
        ok = True
        t0 = time.perf_counter()
        for n in ns:
            I = {lab: symchar.irrep_function(lab, n) for lab in symchar.IRREP_LABELS}
            c2 = symchar.chi_subset_function(n, 2)
            c3 = symchar.chi_subset_function(n, 3)
            s2 = I["[n]"] + I["[n-1,1]"] + I["[n-2,2]"]
            s3 = s2 + I["[n-3,3]"]
            row = {"chi2": c2 == s2, "chi3": c3 == s3}
            if n == 5:
                row["[n-3,3] vanishes"] = not any(I["[n-3,3]"].values)
            if n <= 9:
                row["formulas = MN"] = all(
                    symchar.chi_mn(d, lam) == symchar.chi_irrep(lab, lam)
                    for lab in symchar.IRREP_LABELS if (d := symchar.label_diagram(lab, n)) is not None
                    for lam in symchar.partitions(n))
            dims = [symchar.hook_dim(d) for lab in symchar.IRREP_LABELS[1:]
                    if (d := symchar.label_diagram(lab, n)) is not None]
            closed = [n - 1, n * (n - 3) // 2] + ([n * (n - 1) * (n - 5) // 6] if n >= 6 else [])
            row["hook dims"] = dims
            row["dims ok"] = dims == closed and sum(dims) == groups.n_gens_count(n)
            data[f"n={n}"] = row
            ok &= all(v for k, v in row.items() if k != "hook dims")
        dt = time.perf_counter() - t0
        data["seconds"] = round(dt, 2)
        return ok and dt < 10
    return _run("7 characters", body)


# ---------------------------------------------------------------------------
# 8. oracle and property suites

def minor_gcd_factors(A: list[list[int]]) -> list[int]:
    """Invariant factors from gcds of k x k minors (dense brute force)."""
    import itertools

    rows, cols = len(A), len(A[0]) if A else 0
    out = []
    prev = 1
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in itertools.combinations(range(rows), k):
            for cs in itertools.combinations(range(cols), k):
                g = lattice.gcd_all([g, lattice.determinant([[A[i][j] for j in cs] for i in rs])])
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def naive_reduce(letters: list) -> list:
    """Cancel adjacent inverse pairs until none remain."""
    w = list(letters)
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            if w[i][0] == w[i + 1][0] and w[i][1] == -w[i + 1][1]:
                del w[i:i + 2]
                changed = True
                break
    return w


def tietze_corpus() -> list[Presentation]:
    out = [build(f, n, "full") for f in ("gamma", "gamma_hat") for n in (4, 5)]
    out += [build(f, n, "reduced") for f in ("gamma", "gamma_hat") for n in (4, 5, 6)]
    out += [build(f, n) for f in ("delta", "delta_hat") for n in (4, 5, 6, 7)]
    out += [groups.delta5_rewritten(), groups.double_cover_presentation()]
    p = cached_build("gamma", 5, "reduced")
    t = schreier.coset_table(p, homs.make_hom("nu", p))
    out.append(schreier.rs_presentation(p, t).presentation)
    return out


def tamper(c: rewrite.Certificate, p: Presentation, rng: random.Random) -> rewrite.Certificate | None:
    """Perturb one insert move so that it splices a different segment."""
    inserts = [i for i, mv in enumerate(c.moves) if mv.kind == "insert"]
    if not inserts:
        return None
    i = rng.choice(inserts)
    mv = c.moves[i]
    seg = rewrite._segment(p, mv)
    for cand in (
        rewrite.Move("insert", mv.position, mv.relator, mv.invert, mv.rotation + 1),
        rewrite.Move("insert", mv.position, mv.relator, not mv.invert, mv.rotation),
        rewrite.Move("insert", mv.position, (mv.relator + 1) % len(p.relators), mv.invert, mv.rotation),
    ):
        if rewrite._segment(p, cand) != seg:
            moves = c.moves[:i] + (cand,) + c.moves[i + 1:]
            return rewrite.Certificate(c.start, moves, c.end)
    return None


def check_oracles(seed: int = 0, n_snf: int = 500) -> CheckResult:
    def body(data):
        rng = random.Random(seed)
        ok = True
        # SNF against minors
        mism = 0
        for _ in range(n_snf):
            r, c = rng.randint(1, 5), rng.randint(1, 5)
            A = [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]
            got = list(lattice.invariant_factors(SparseIntMatrix.from_dense(A, cols=c)))
            mism += got != minor_gcd_factors(A)
        data["snf vs minors"] = {"matrices": n_snf, "mismatches": mism}
        ok &= mism == 0
        # Tietze keeps H1
        rows = {}
        for p in tietze_corpus():
            q, _ = tietze_simplify(p)
            key = f"{p.meta.family} n={p.meta.n} {p.meta.mode} ({p.ngens} gens)"
            rows[key] = h1(p) == h1(q) and q.ngens <= p.ngens
        data["tietze preserves h1"] = rows
        ok &= all(rows.values())
        # free reduction
        bad = 0
        for _ in range(2000):
            raw = [letter(rng.randrange(3), rng.choice((1, -1))) for _ in range(rng.randint(0, 14))]
            w = Word(raw)
            bad += list(w) != naive_reduce(raw) or Word(w) != w or (w * ~w) != Word()
        data["free reduction"] = {"words": 2000, "failures": bad}
        ok &= bad == 0
        # certificate tampering
        caught = tried = 0
        for fam, n in (("gamma_hat", 5), ("gamma", 5), ("gamma_hat", 6)):
            p = rewrite.family_presentation(fam, n)
            for q in rng.sample(groups.quads_of(p), 40):
                _, cert = rewrite.rewrite_in_lambda(q, n, fam)
                bent = tamper(cert, p, rng)
                if bent is None:
                    continue
                tried += 1
                try:
                    caught += not rewrite.verify_certificate(bent, p)
                except IndexError:
                    caught += 1
        data["tamper detection"] = {"tampered": tried, "detected": caught}
        ok &= caught == tried > 0
        return ok
    return _run("8 oracles and properties", body)


# ---------------------------------------------------------------------------

def check_presentation_file(path) -> CheckResult:
    """A saved family presentation must equal a fresh build."""
    def body(data):
        p = load(path)
        m = p.meta
        data["file"] = str(path)
        data["meta"] = {"family": m.family, "n": m.n, "mode": m.mode}
        ref = build(m.family, m.n, m.mode)
        same_gens = p.generators == ref.generators
        same_rels = p.relators == ref.relators
        data["generators match"] = same_gens
        data["relators match"] = same_rels
        return same_gens and same_rels
    return _run(f"presentation file {path}", body)


def run_all(ns=(4, 5, 6), include_slow: bool = False, seed: int = 0,
            files=()) -> list[CheckResult]:
    ns = tuple(ns)
    res = [
        check_abelianizations(ns, include_slow),
        check_lattice_images(),
        check_mod2_ranks(),
        check_schreier(include_slow),
        check_delta5(),
        check_rewriting(),
        check_characters(),
        check_oracles(seed),
    ]
    res += [check_presentation_file(f) for f in files]
    return res
