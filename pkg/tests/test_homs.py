import itertools
import random
from math import comb

import numpy as np
import pytest

from kmgroups.groups import build, canonical_quad, quads_of
from kmgroups.homs import (SubsetBasis, basis_vector, check_well_defined, eta3, eta3_matrix, evaluate,
                           make_hom, nu, phi2, phi3)
from kmgroups.lattice import lattice_image_invariants, rank_over_q, SparseIntMatrix
from kmgroups.words import Word, letter


def vec(n, k, terms):
    v = np.zeros(comb(n, k), dtype=np.int64)
    for s, c in terms:
        v += c * basis_vector(n, s)
    return v


def test_subset_basis_order():
    b = SubsetBasis(5, 3)
    assert len(b) == 10 and b.subsets[:3] == [(1, 2, 3), (1, 2, 4), (1, 2, 5)]
    assert b.index((3, 2, 1)) == 0


def test_phi3_examples():
    assert (phi3((1, 2, 3, 4), 4) == vec(4, 3, [((1, 2, 3), 1), ((1, 2, 4), -1), ((1, 3, 4), 1), ((2, 3, 4), -1)])).all()
    labels = [(2, 4, 3, 5), (2, 3, 4, 5)]
    w = Word([letter(0), letter(1, -1)])
    assert (evaluate(w, labels, phi3, 5) == vec(5, 3, [((2, 3, 5), 2), ((2, 4, 5), -2)])).all()
    labels = [(1, 3, 2, 4), (3, 5, 4, 6), (5, 1, 6, 2)]
    v = evaluate(Word([letter(0), letter(1), letter(2)]), labels, phi3, 6)
    b = SubsetBasis(6, 3)
    assert v[b.index((1, 2, 3))] == 1 and v[b.index((1, 3, 5))] == 0
    assert not evaluate(Word([letter(0), letter(1), letter(2)]), labels, phi2, 6).any()


def test_phi2_examples():
    assert (phi2((1, 2, 3, 4), 4) == vec(4, 2, [((1, 3), 1), ((2, 4), -1)])).all()
    assert (phi2((1, 4, 2, 5), 5) == vec(5, 2, [((1, 2), 1), ((4, 5), -1)])).all()


def test_eta3():
    assert (eta3(basis_vector(5, (1, 2, 3)), 5) == vec(5, 2, [((1, 2), 1), ((2, 3), 1), ((1, 3), 1)])).all()
    assert not eta3(np.zeros(10, dtype=np.int64), 5).any()
    with pytest.raises(ValueError):
        eta3(np.zeros(9, dtype=np.int64), 5)


def test_eta3_phi3_is_twice_phi2():
    rng = random.Random(2)
    for n in range(4, 9):
        E = eta3_matrix(n)
        for q in itertools.permutations(range(1, n + 1), 4):
            assert (E @ phi3(q, n) == 2 * phi2(q, n)).all()
    for _ in range(1000):
        n = rng.randint(5, 7)
        labels = list(itertools.permutations(range(1, n + 1), 4))
        w = Word([letter(rng.randrange(len(labels)), rng.choice((1, -1))) for _ in range(rng.randint(0, 8))])
        assert (eta3(evaluate(w, labels, phi3, n), n) == 2 * evaluate(w, labels, phi2, n)).all()


def test_phi2_image_is_augmentation_zero():
    # at n = 4 only three vectors {i,k} - {j,l} occur, far from the whole lattice
    vs4 = [phi2(q, 4).tolist() for q in itertools.permutations(range(1, 5), 4)]
    assert rank_over_q(SparseIntMatrix.from_dense(vs4)) == 3
    for n in range(5, 8):
        vs = [phi2(q, n).tolist() for q in itertools.permutations(range(1, n + 1), 4)]
        d = comb(n, 2)
        assert all(sum(v) == 0 for v in vs)
        assert rank_over_q(SparseIntMatrix.from_dense(vs)) == d - 1
        image, quotient = lattice_image_invariants(vs, d)
        # the differences {1,2} - {a,b} span the augmentation-zero lattice
        diffs = [(basis_vector(n, (1, 2)) - basis_vector(n, s)).tolist()
                 for s in itertools.combinations(range(1, n + 1), 2) if s != (1, 2)]
        both, _ = lattice_image_invariants(vs + diffs, d)
        assert image == both and quotient.free_rank == 1 and quotient.torsion == ()


def test_well_definedness():
    for n in (5, 6):
        p = build("gamma_hat", n)
        assert check_well_defined(make_hom("phi3", p), p) == []
        assert check_well_defined(make_hom("phi2", p), p) == []
    for n in range(4, 8):
        p = build("gamma_hat", n, "reduced")
        assert check_well_defined(make_hom("phi3", p), p) == []
        g = build("gamma", n, "reduced")
        assert check_well_defined(make_hom("phi3_mod2", g), g) == []
        assert check_well_defined(make_hom("phi2_mod2", g), g) == []
    g5 = build("gamma", 5)
    assert check_well_defined(make_hom("phi3", g5), g5) != []
    assert check_well_defined(make_hom("nu", g5), g5) == []


def test_nu():
    p = build("gamma", 5)
    assert nu(p.word("(1234)"), p) == 1 and nu(p.word("(2345)"), p) == 0
    assert nu(p.word("(1234) (1235)"), p) == 0
    for q in quads_of(p):
        assert nu(Word.gen(p.index()[f"({''.join(map(str, canonical_quad(q)[0]))})"]), p) == int(1 in q)
    with pytest.raises(ValueError):
        make_hom("nu", build("gamma", 6, "reduced"))


def test_abelianization_hom():
    for fam, n, mode in [("gamma", 5, "reduced"), ("gamma_hat", 5, "reduced"), ("delta", 6, "full")]:
        p = build(fam, n, mode)
        h = make_hom("abelianization", p)
        assert check_well_defined(h, p) == []
        # surjective: the image of the generators spans the target
        from kmgroups.lattice import h1
        inv = h1(p)
        assert list(h.moduli) == [0] * inv.free_rank + list(inv.torsion) or \
            sorted(h.moduli) == sorted([0] * inv.free_rank + list(inv.torsion))


def test_registry_errors():
    p = build("gamma", 4, "reduced")
    with pytest.raises(ValueError):
        make_hom("nope", p)
