# %% [markdown]
# # Characters of the symmetric group on subsets
#
# Permutation characters on 2- and 3-subsets split into the four hook-like
# irreducibles, and their dimensions add up to C(n,3) - 1.

# %%
from kmgroups.symchar import (IRREP_LABELS, chi_mn, chi_subset_function, hook_dim, inner_product,
                              irrep_function, label_diagram, partitions)

n = 7
print([list(l) for l in partitions(n)])
c3 = chi_subset_function(n, 3)
print("chi3   ", c3.values)
for lab in IRREP_LABELS:
    f = irrep_function(lab, n)
    print(f"{lab:8s}", f.values, inner_product(c3, f))

# %%
for n in range(5, 11):
    I = [irrep_function(l, n) for l in IRREP_LABELS]
    print(n, chi_subset_function(n, 2) == I[0] + I[1] + I[2], chi_subset_function(n, 3) == I[0] + I[1] + I[2] + I[3])

# %% [markdown]
# The closed formulas agree with Murnaghan-Nakayama, and the degrees come
# from the hook length formula.

# %%
for n in range(5, 10):
    dims = []
    for lab in IRREP_LABELS[1:]:
        d = label_diagram(lab, n)
        if d is None:
            continue
        assert all(chi_mn(d, lam) == irrep_function(lab, n).values[i] for i, lam in enumerate(partitions(n)))
        dims.append(hook_dim(d))
    print(n, dims, sum(dims))
