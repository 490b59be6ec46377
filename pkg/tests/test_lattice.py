import random

import pytest
from hypothesis import given, settings, strategies as st

from kmgroups.checks import minor_gcd_factors
from kmgroups.lattice import (AbelianInvariants, SparseIntMatrix, cokernel, determinant,
                              invariant_factors, lattice_image_invariants, rank_mod_p, rank_over_q,
                              read_matrix_market, simplex_boundary_matrix, smith_normal_form,
                              write_matrix_market)

small = st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)))


def _matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def test_worked_examples():
    assert invariant_factors(SparseIntMatrix.from_dense([[2, 4], [6, 8]])) == (2, 4)
    assert invariant_factors(SparseIntMatrix.from_dense([[6, 0], [0, 4]])) == (2, 12)
    assert invariant_factors(SparseIntMatrix(3, 2, {})) == ()
    assert invariant_factors(SparseIntMatrix(0, 0, {})) == ()


def test_snf_against_minors_seeded():
    rng = random.Random(1)
    for _ in range(500):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        A = [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]
        assert list(invariant_factors(SparseIntMatrix.from_dense(A, cols=c))) == minor_gcd_factors(A)


@settings(max_examples=150)
@given(small)
def test_snf_transforms_are_unimodular(A):
    m = SparseIntMatrix.from_dense(A)
    res = smith_normal_form(m, transforms=True)
    assert abs(determinant(res.U)) == 1 and abs(determinant(res.V)) == 1
    assert _matmul(_matmul(res.U, A), res.V) == res.diagonal()
    assert res.factors == invariant_factors(m)
    f = res.factors
    assert all(b % a == 0 for a, b in zip(f, f[1:]))


@settings(max_examples=100)
@given(small, st.sampled_from((2, 3, 5, 7)))
def test_rank_mod_p_bounded_by_rational_rank(A, p):
    m = SparseIntMatrix.from_dense(A)
    assert rank_mod_p(m, p) <= rank_over_q(m) == len(invariant_factors(m))
    # rank drops mod p exactly where p divides an invariant factor
    assert rank_mod_p(m, p) == sum(1 for d in invariant_factors(m) if d % p)


def test_rank_mod_p_rejects_composite():
    with pytest.raises(ValueError):
        rank_mod_p(SparseIntMatrix.from_dense([[1]]), 4)
    assert rank_mod_p(SparseIntMatrix.from_dense([[1, 0, 0], [0, 1, 0], [0, 0, 1]]), 5) == 3


def test_unit_pivot_path_matches_dense_path():
    rng = random.Random(7)
    for _ in range(40):
        r, c = rng.randint(5, 25), rng.randint(5, 25)
        ent = {(rng.randrange(r), rng.randrange(c)): rng.choice((-2, -1, 1, 1, 2, 3)) for _ in range(r * 2)}
        m = SparseIntMatrix(r, c, ent)
        assert smith_normal_form(m).factors == smith_normal_form(m, transforms=True).factors


def test_abelian_invariants_format_and_parse():
    inv = AbelianInvariants(2, (2,) * 6)
    assert str(inv) == "Z^2 + (Z/2)^6"
    assert inv.expanded() == "Z^2 + Z/2 + Z/2 + Z/2 + Z/2 + Z/2 + Z/2"
    assert AbelianInvariants.parse(str(inv)) == inv
    assert AbelianInvariants.parse(inv.expanded()) == inv
    assert AbelianInvariants.parse("Z/6 + Z/4") == AbelianInvariants(0, (2, 12))
    assert str(AbelianInvariants(0)) == "0"
    assert AbelianInvariants(0, (2, 2)).order == 4 and not AbelianInvariants(1).is_finite
    with pytest.raises(ValueError):
        AbelianInvariants(0, (2, 3))


def test_lattice_image_invariants():
    image, quotient = lattice_image_invariants([[2, 0]])
    assert image == AbelianInvariants(1) and quotient == AbelianInvariants(1, (2,))
    with pytest.raises(ValueError):
        lattice_image_invariants([[1, 2], [1]])


def test_simplex_boundary():
    for n in range(3, 9):
        for k in range(1, n - 1):
            d = simplex_boundary_matrix(n, k) @ simplex_boundary_matrix(n, k + 1)
            assert d.nnz == 0
    assert rank_mod_p(simplex_boundary_matrix(5, 3), 2) == 4
    assert rank_mod_p(simplex_boundary_matrix(6, 3), 2) == 10
    with pytest.raises(ValueError):
        simplex_boundary_matrix(5, 5)
    # the simplex is acyclic: H_0 = Z, higher homology vanishes
    assert cokernel(simplex_boundary_matrix(5, 1).transpose()) == AbelianInvariants(1)


def test_matrix_market_roundtrip(tmp_path):
    m = SparseIntMatrix(3, 4, {(0, 1): -2, (2, 3): 12345678901234567890})
    path = tmp_path / "m.mtx"
    write_matrix_market(m, path)
    assert read_matrix_market(path) == m


def test_sparse_matrix_ops():
    a = SparseIntMatrix.from_dense([[1, 2], [0, 3]])
    assert a.transpose().to_dense() == [[1, 0], [2, 3]]
    assert (a @ a).to_dense() == [[1, 8], [0, 9]]
    assert a.vstack(a).shape == (4, 2) and a.hstack(a).shape == (2, 4)
    assert a[1, 1] == 3 and a[1, 0] == 0
