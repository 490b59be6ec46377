# %% [markdown]
# # Kernels of maps onto finite abelian groups
#
# The parity of labels containing 1 gives an index two subgroup of the
# n = 5 group.  The coset table, a Schreier transversal and the rewriting
# process produce a presentation of that subgroup.

# %%
from kmgroups import build, h1, tietze_simplify
from kmgroups.homs import make_hom
from kmgroups.schreier import coset_table, format_tau, h1_kernel, rs_presentation, schreier_transversal, tau

theta = build("gamma", 5, "reduced")
nu = make_hom("nu", theta)
t = coset_table(theta, nu)
reps = schreier_transversal(t)
print(t.index, [theta.format(w) for w in reps])

# %%
w = theta.word("(1234) (1245) (2345) (1235) (1345)")
print(format_tau(tau(w, 0, t), theta, t))

# %%
rs = rs_presentation(theta, t)
print(rs.presentation.ngens, "Schreier generators,", rs.tau_relators, "rewritten relators,",
      len(rs.trivial), "freely trivial")
small, _ = tietze_simplify(rs.presentation, max_relator_length=2)
print(small.ngens, "generators and", len(small.relators), "relators after renamings")
print("H1 of the kernel:", h1(small), "=", h1_kernel(theta, nu))

# %% [markdown]
# ## The commutator subgroup
#
# Mapping onto H1 = (Z/2)^9 gives 512 cosets.  The relators are streamed
# straight into a sparse matrix (about 13824 rows by 7000 columns).

# %%
import time

ab = make_hom("abelianization", theta)
t0 = time.perf_counter()
print(coset_table(theta, ab).index, h1_kernel(theta, ab), f"{time.perf_counter() - t0:.1f} s")
