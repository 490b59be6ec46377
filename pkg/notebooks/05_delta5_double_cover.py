# %% [markdown]
# # An index two subgroup of the n = 5 increasing-label group
#
# Three routes to the same homology: the explicit three generator
# presentation, the kernel of the all-ones map on the four generator
# presentation, and the same map pulled back to the five generator one.

# %%
from kmgroups import build, h1
from kmgroups.groups import delta5_rewritten, double_cover_presentation
from kmgroups.homs import make_hom
from kmgroups.schreier import h1_kernel

y = double_cover_presentation()
print(y.generators, [y.format(r) for r in y.relators], h1(y))

r = delta5_rewritten()
print([r.format(x) for x in r.relators][-1])
print(h1(r), h1_kernel(r, make_hom("eps_all_ones", r)))

d = build("delta", 5)
eps = make_hom("eps_all_ones", d)
print(dict(zip(d.generators, eps.images[:, 0].tolist())), h1_kernel(d, eps))
