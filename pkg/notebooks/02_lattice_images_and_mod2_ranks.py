# %% [markdown]
# # Lattice images and ranks mod 2
#
# The map to the free abelian group on 3-subsets sends each generator to an
# alternating sum of four triples.  Its image is free of rank C(n,3) - 1 but
# is not a direct summand: the quotient carries torsion from n = 5 on.

# %%
from math import comb

from kmgroups.groups import lambda_generators, canonical_quads
from kmgroups.homs import phi2, phi3, eta3_matrix
from kmgroups.lattice import SparseIntMatrix, lattice_image_invariants, rank_mod_p, simplex_boundary_matrix

for n in range(4, 8):
    vs = [phi3(q, n).tolist() for q in lambda_generators(n)]
    image, quotient = lattice_image_invariants(vs, comb(n, 3))
    print(f"n={n}  image {image}  quotient {quotient}")

# %% [markdown]
# Applying the triangle map to the triple-valued map gives twice the pair-valued one.

# %%
n = 6
E = eta3_matrix(n)
print(all((E @ phi3(q, n) == 2 * phi2(q, n)).all() for q in canonical_quads(n)))

# %% [markdown]
# ## Mod 2
#
# The triple part alone has rank C(n-1,3), which matches the rank of the
# simplicial boundary from 3-faces to 2-faces.  Adding the pair part brings
# the rank up to C(n,3) - 1.

# %%
for n in range(4, 9):
    qs = canonical_quads(n)
    m3 = SparseIntMatrix.from_dense([phi3(q, n).tolist() for q in qs])
    m2 = SparseIntMatrix.from_dense([phi2(q, n).tolist() for q in qs])
    print(n, rank_mod_p(m3, 2), rank_mod_p(simplex_boundary_matrix(n, 3), 2),
          rank_mod_p(m3.hstack(m2), 2), comb(n - 1, 3), comb(n, 3) - 1)
