# %% [markdown]
# # Presentations and their abelianizations
#
# Build the four group families, look at their relator counts, and compute
# first homology by Smith normal form of the exponent-sum matrix.

# %%
from kmgroups import build, h1, tietze_simplify
from kmgroups.groups import n_gens_count

for fam in ("gamma", "gamma_hat"):
    for n in (4, 5, 6):
        p = build(fam, n)
        kinds = {k: p.count(k) for k in ("involutive", "commutative", "pentagon", "dihedral")}
        print(f"{fam:9s} n={n}  {p.ngens:4d} gens  {len(p.relators):6d} rels  {kinds}  H1 = {h1(p)}")

# %% [markdown]
# The torsion rank (or free rank) equals C(n,3) - 1 every time.

# %%
print([n_gens_count(n) for n in (4, 5, 6, 7)])

# %% [markdown]
# ## Reduced mode
#
# One generator per dihedral orbit.  For n = 5 that leaves 15 generators and
# 27 relators: 15 squares and 12 pentagons.

# %%
theta = build("gamma", 5, "reduced")
print(theta)
for r in theta.relators[-3:]:
    print(" ", theta.format(r))
print(h1(theta), h1(build("gamma", 7, "reduced")))

# %% [markdown]
# ## Increasing labels

# %%
for n in range(4, 9):
    print(n, h1(build("delta", n)), h1(build("delta_hat", n)))

# %% [markdown]
# ## Tietze simplification
#
# With no involutions and n = 4 the signed group collapses to a free group.

# %%
q, log = tietze_simplify(build("gamma_hat", 4))
print(q.generators, q.relators, len(log), "moves")
q, _ = tietze_simplify(build("gamma", 5))
print(q, h1(q))
