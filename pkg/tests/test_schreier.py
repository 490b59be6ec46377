import pytest

from kmgroups.groups import build, delta5_rewritten, double_cover_presentation
from kmgroups.homs import make_hom
from kmgroups.lattice import AbelianInvariants, h1
from kmgroups.presentation import presentation, tietze_simplify
from kmgroups.schreier import (coset_table, format_tau, h1_kernel, parse_transversal, rs_presentation,
                               rs_relation_matrix, schreier_transversal, tau, transversal_from_words,
                               trivial_pairs)
from kmgroups.lattice import cokernel
from kmgroups.words import Word


@pytest.fixture(scope="module")
def theta():
    return build("gamma", 5, "reduced")


def test_nu_table_and_transversal(theta):
    t = coset_table(theta, make_hom("nu", theta))
    assert t.index == 2 and t.fwd[0, theta.index()["(1234)"]] == 1
    reps = schreier_transversal(t)
    assert [theta.format(w) for w in reps] == ["1", "(1234)"]


def test_tau_examples(theta):
    t = coset_table(theta, make_hom("nu", theta))
    w = theta.word("(1234) (1235) (1235) (1234)^-1")
    assert format_tau(tau(w, 0, t), theta, t) == "alpha(1234) beta(1235) alpha(1235) alpha(1234)^-1"
    a = theta.word("(1234) (1245) (2345) (1235) (1345)")
    assert format_tau(tau(a, 0, t), theta, t) == "alpha(1234) beta(1245) alpha(2345) alpha(1235) beta(1345)"


def test_rs_counts(theta):
    t = coset_table(theta, make_hom("nu", theta))
    rs = rs_presentation(theta, t)
    assert rs.presentation.ngens == 30 and rs.tau_relators == 54 == 2 * len(theta.relators)
    assert sorted(rs.trivial) == [(0, 0)]
    assert rs.naming["alpha(1234)"]["trivial"] and not rs.naming["beta(1234)"]["trivial"]
    simp, _ = tietze_simplify(rs.presentation, max_relator_length=2)
    assert (simp.ngens, len(simp.relators)) == (17, 30)
    assert h1(simp) == h1(rs.presentation) == AbelianInvariants(2, (2,) * 6)


def test_h1_kernel_nu_routes_agree(theta):
    nu = make_hom("nu", theta)
    want = AbelianInvariants(2, (2,) * 6)
    assert h1_kernel(theta, nu) == want
    assert h1_kernel(theta, nu, simplify=False) == want
    assert h1_kernel(theta, nu, transversal=parse_transversal("1;(1234)", theta)) == want
    # another Schreier transversal gives the same answer
    assert h1_kernel(theta, nu, transversal=parse_transversal("1;(1235)", theta)) == want
    # and so does the full 120 generator presentation
    full = build("gamma", 5)
    assert h1_kernel(full, make_hom("nu", full)) == want


def test_delta5_routes():
    want = AbelianInvariants(2, (2,))
    assert h1(double_cover_presentation()) == want
    d = build("delta", 5)
    assert coset_table(d, make_hom("eps_all_ones", d)).index == 2
    assert h1_kernel(d, make_hom("eps_all_ones", d)) == want
    r = delta5_rewritten()
    assert h1_kernel(r, make_hom("eps_all_ones", r)) == want
    y = double_cover_presentation()
    assert h1_kernel(y, make_hom("trivial", y)) == want


def test_free_group_schreier_index_formula():
    for g in (1, 2, 3):
        p = presentation([f"x{i}" for i in range(g)], [])
        for m in (2, 4):
            import numpy as np
            from kmgroups.homs import AbelianHom
            h = AbelianHom("cyc", np.ones((g, 1), dtype=np.int64), (m,))
            t = coset_table(p, h)
            reps = schreier_transversal(t)
            nontrivial = t.index * g - len(trivial_pairs(t, reps))
            assert nontrivial == t.index * g - t.index + 1
            assert h1_kernel(p, h) == AbelianInvariants(nontrivial)


def test_stream_matrix_matches_presentation(theta):
    t = coset_table(theta, make_hom("nu", theta))
    assert cokernel(rs_relation_matrix(theta, t)) == h1(rs_presentation(theta, t).presentation)


def test_table_errors(theta):
    with pytest.raises(ValueError):
        coset_table(theta, make_hom("phi3", build("gamma", 5, "reduced")))  # infinite target
    g = build("gamma", 5)
    with pytest.raises(ValueError):
        coset_table(g, make_hom("eps_all_ones", g))  # odd pentagons: not well defined
    with pytest.raises(ValueError):
        coset_table(g, make_hom("nu", theta))  # generator count mismatch


def test_transversal_validation(theta):
    t = coset_table(theta, make_hom("nu", theta))
    with pytest.raises(ValueError):
        transversal_from_words(t, parse_transversal("1", theta))
    with pytest.raises(ValueError):
        transversal_from_words(t, parse_transversal("(1234);(1235)", theta))


@pytest.mark.slow
def test_commutator_subgroup(theta):
    h = make_hom("abelianization", theta)
    t = coset_table(theta, h)
    reps = schreier_transversal(t)
    assert t.index == 512 and max(len(w) for w in reps) <= 9
    assert h1_kernel(theta, h) == AbelianInvariants(145, (2,) * 18)
