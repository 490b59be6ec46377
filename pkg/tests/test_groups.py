import itertools
from math import comb

import pytest

from kmgroups.groups import (build, build_delta, build_gamma, build_gamma_hat, canonical_quad,
                             canonical_quads, delta5_rewritten, dihedral_orbit, lambda_generators,
                             n_gens_closed_form, n_gens_count, parse_quad, pentagon_orientations,
                             quad_name)
from kmgroups.lattice import AbelianInvariants, SparseIntMatrix, h1, rank_mod_p
from kmgroups.presentation import abelianized_relation_matrix


def test_gamma_counts():
    p = build_gamma(4)
    assert p.ngens == 24 and p.count("commutative") == 0 and p.count("pentagon") == 0
    assert h1(p) == AbelianInvariants(0, (2, 2, 2))
    p = build_gamma(5)
    assert (p.ngens, p.count("pentagon"), p.count("commutative")) == (120, 120, 0)


def test_commutator_count_brute_force_n6():
    sets = list(itertools.combinations(range(1, 7), 4))
    pairs = sum(1 for a, b in itertools.combinations(sets, 2) if len(set(a) & set(b)) <= 2)
    assert pairs == 45
    p = build_gamma(6)
    assert p.ngens == 360 and p.count("commutative") == pairs * 24 * 24 == 25920


def test_gamma_hat():
    assert build_gamma_hat(4).ngens == 24
    assert h1(build_gamma_hat(5)) == AbelianInvariants(9)
    assert h1(build_gamma_hat(6)) == AbelianInvariants(19)


def test_delta():
    p = build_delta(4)
    assert (p.ngens, len(p.relators)) == (1, 1) and h1(p) == AbelianInvariants(0, (2,))
    p = build_delta(5)
    assert (p.ngens, p.count("pentagon"), p.count("involutive"), p.count("commutative")) == (5, 1, 5, 0)
    assert h1(build_delta(5, hat=True)) == AbelianInvariants(4)
    assert h1(delta5_rewritten()) == h1(p)


def test_reduced_matches_full():
    for fam in ("gamma", "gamma_hat"):
        for n in (4, 5, 6):
            assert h1(build(fam, n, "reduced")) == h1(build(fam, n, "full"))
    p = build_gamma(5, "reduced")
    assert (p.ngens, len(p.relators), p.count("pentagon")) == (15, 27, 12)


def test_builders_reject_small_n():
    for f in (build_gamma, build_gamma_hat, build_delta):
        with pytest.raises(ValueError):
            f(3)
    with pytest.raises(ValueError):
        build("delta", 5, "reduced")


def test_canonical_quad_examples():
    assert canonical_quad((2, 1, 3, 4)) == ((1, 2, 4, 3), 1)
    assert set(dihedral_orbit((2, 1, 3, 4))) == {
        (2, 1, 3, 4), (1, 3, 4, 2), (3, 4, 2, 1), (4, 2, 1, 3),
        (4, 3, 1, 2), (3, 1, 2, 4), (1, 2, 4, 3), (2, 4, 3, 1)}
    assert canonical_quad((2, 3, 4, 1), signed=True) == ((1, 2, 3, 4), -1)
    assert canonical_quad((3, 4, 1, 2), signed=True) == ((1, 2, 3, 4), 1)


def test_canonical_quad_properties():
    for n in (4, 5, 6, 7):
        qs = list(itertools.permutations(range(1, n + 1), 4))
        for q in qs:
            orb = dihedral_orbit(q)
            assert len(orb) == 8
            c, s = canonical_quad(q, signed=True)
            assert all(canonical_quad(x)[0] == c for x in orb)
            # signs are consistent: no member is forced to equal its own inverse
            assert orb[q] == 1
        assert len(canonical_quads(n)) == 3 * comb(n, 4)
    assert len(canonical_quads(5)) == 15


def test_pentagon_orientations():
    t = pentagon_orientations((1, 2, 3, 4, 5))
    assert len(t) == 12 == len(set(t))
    # every ordered 5-tuple is a cyclic shift or reversal of exactly one of them
    def orbit(x):
        out = set()
        for k in range(5):
            y = x[k:] + x[:k]
            out |= {y, y[::-1]}
        return frozenset(out)
    assert len({orbit(x) for x in t}) == 12


def test_lambda():
    assert lambda_generators(4) == [(1, 2, 3, 4), (1, 3, 2, 4), (1, 2, 4, 3)]
    assert set(lambda_generators(5)) == {(1, 2, 3, 4), (1, 2, 3, 5), (1, 3, 2, 4), (1, 3, 2, 5),
                                         (1, 4, 2, 5), (1, 2, 4, 3), (1, 2, 5, 3), (1, 2, 5, 4),
                                         (1, 3, 5, 4)}
    for n in range(4, 13):
        assert len(lambda_generators(n)) == n_gens_count(n) == n_gens_closed_form(n) == comb(n, 3) - 1
        assert len(lambda_generators(n, "delta")) == comb(n - 1, 3)


def test_natural_map_hat_to_gamma_on_h1():
    # identical generator sets; Gamma adds relators, so H1 maps onto H1.  The
    # map is the identity on generators; check that mod 2 it is an iso.
    for n in (4, 5, 6):
        a = h1(build_gamma_hat(n, "reduced"))
        b = h1(build_gamma(n, "reduced"))
        assert a.free_rank == len(b.torsion)
        m = abelianized_relation_matrix(build_gamma_hat(n, "reduced"))
        g = build_gamma_hat(n, "reduced").ngens
        # rank mod 2 of the hat relations equals g - N, so mod 2 the quotient has dimension N
        assert g - rank_mod_p(m, 2) == n_gens_count(n)


def test_names():
    assert quad_name((1, 2, 3, 4)) == "(1234)"
    assert quad_name((10, 2, 3, 4)) == "(10,2,3,4)"
    assert parse_quad("(10,2,3,4)") == (10, 2, 3, 4) and parse_quad("(1123)") is None
