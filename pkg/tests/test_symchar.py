import itertools
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from kmgroups.groups import n_gens_count
from kmgroups.symchar import (IRREP_LABELS, ClassFunction, Partition, chi_irrep, chi_mn, chi_subset_function,
                              chi_subsets, class_size, hook_dim, inner_product, irrep_function,
                              label_diagram, partitions)


def partition_count(n):
    # Euler's pentagonal recurrence
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, s = 1, 0
        while True:
            for g in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
                if g > m:
                    break
                s += (-1) ** (k + 1) * p[m - g]
            if k * (3 * k - 1) // 2 > m:
                break
            k += 1
        p[m] = s
    return p[n]


def cycle_type(perm):
    seen, out = set(), []
    for i in range(len(perm)):
        if i not in seen:
            j, L = i, 0
            while j not in seen:
                seen.add(j)
                j = perm[j]
                L += 1
            out.append(L)
    return tuple(sorted(out, reverse=True))


def test_partitions():
    assert len(partitions(4)) == 5 and len(partitions(5)) == 7
    for n in range(1, 16):
        assert len(partitions(n)) == partition_count(n)
    assert partitions(4)[0] == (4,) and partitions(4)[-1] == (1, 1, 1, 1)
    ps = partitions(8)
    assert list(ps) == sorted(ps, reverse=True)
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_class_sizes_brute_force():
    for n in range(1, 7):
        counts = {}
        for perm in itertools.permutations(range(n)):
            ct = cycle_type(perm)
            counts[ct] = counts.get(ct, 0) + 1
        assert counts == {tuple(lam): class_size(lam) for lam in partitions(n)}
    assert class_size((3, 2, 1, 1, 1)) == 1120
    for n in range(1, 12):
        assert sum(class_size(l) for l in partitions(n)) == factorial(n)
        assert class_size((n,)) == factorial(n - 1)


def test_chi_subsets():
    assert chi_subsets((3, 2, 1, 1, 1), 2) == 4
    assert chi_subsets((3, 2, 1, 1, 1), 3) == 5
    for n in range(2, 10):
        for lam in partitions(n):
            i1, i2, i3 = lam.mult(1), lam.mult(2), lam.mult(3)
            assert chi_subsets(lam, 2) == i2 + comb(i1, 2)
            if n >= 3:
                assert chi_subsets(lam, 3) == i3 + i1 * i2 + comb(i1, 3)
        for k in range(n + 1):
            assert chi_subsets((1,) * n, k) == comb(n, k)


def test_chi_subsets_brute_force():
    n = 6
    for perm in itertools.permutations(range(n)):
        lam = cycle_type(perm)
        for k in (2, 3):
            fixed = sum(1 for s in itertools.combinations(range(n), k) if {perm[i] for i in s} == set(s))
            assert fixed == chi_subsets(lam, k)


def test_irrep_examples():
    assert chi_irrep("[n-1,1]", (2, 1, 1, 1)) == 2
    for n in range(4, 10):
        assert chi_irrep("[n-2,2]", (1,) * n) == n * (n - 3) // 2 == hook_dim((n - 2, 2))
    assert not any(irrep_function("[n-3,3]", 5).values)
    with pytest.raises(ValueError):
        chi_irrep("[n-4,4]", (1,) * 5)


def test_mn_oracle():
    for n in range(5, 10):
        for lab in IRREP_LABELS:
            d = label_diagram(lab, n)
            if d is None:
                continue
            for lam in partitions(n):
                assert chi_mn(d, lam) == chi_irrep(lab, lam)
    for n in range(1, 9):
        for d in partitions(n):
            assert chi_mn(d, (1,) * n) == hook_dim(d)
        assert all(chi_mn((n,), lam) == 1 for lam in partitions(n))


def test_mn_orthonormal():
    for n in range(2, 8):
        fs = [ClassFunction.from_function(n, lambda lam, d=d: chi_mn(d, lam)) for d in partitions(n)]
        for i, f in enumerate(fs):
            for j, g in enumerate(fs):
                assert inner_product(f, g) == (1 if i == j else 0)


def test_decompositions():
    for n in range(6, 11):
        I = [irrep_function(l, n) for l in IRREP_LABELS]
        c2, c3 = chi_subset_function(n, 2), chi_subset_function(n, 3)
        assert c2 == I[0] + I[1] + I[2]
        assert c3 == I[0] + I[1] + I[2] + I[3]
        assert inner_product(c2, c2) == 3
        assert inner_product(c3, I[3]) == 1
        assert inner_product(I[0], I[0]) == 1
    I5 = [irrep_function(l, 5) for l in IRREP_LABELS]
    assert chi_subset_function(5, 3) == I5[0] + I5[1] + I5[2] + I5[3]


def test_hook_dims():
    assert hook_dim((4, 1)) == 4 and hook_dim((3, 2)) == 5 and hook_dim((3, 3)) == 5
    assert hook_dim((4, 1)) + hook_dim((3, 2)) == 9 == n_gens_count(5)
    for n in range(6, 15):
        dims = [hook_dim((n - 1, 1)), hook_dim((n - 2, 2)), hook_dim((n - 3, 3))]
        assert dims == [n - 1, n * (n - 3) // 2, n * (n - 1) * (n - 5) // 6]
        assert sum(dims) == n_gens_count(n)


def test_class_function_json():
    f = chi_subset_function(6, 3)
    assert ClassFunction.from_json(f.to_json()) == f
    with pytest.raises(ValueError):
        inner_product(f, chi_subset_function(5, 3))
    with pytest.raises(ValueError):
        ClassFunction(5, (1, 2))
