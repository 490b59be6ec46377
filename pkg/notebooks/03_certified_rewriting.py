# %% [markdown]
# # Rewriting generators with certificates
#
# Every generator is a word in the minimal generating set.  The rewriter
# records each relator it splices in, so the derivation can be replayed and
# checked by anyone holding the presentation.

# %%
from kmgroups.rewrite import family_presentation, format_lambda_word, rewrite_in_lambda, verify_certificate

w, cert = rewrite_in_lambda((1, 3, 4, 5), 5, "gamma_hat")
print(format_lambda_word(w, 5))
print(len(cert.moves), "moves; verifies:", verify_certificate(cert, family_presentation("gamma_hat", 5)))
for mv in cert.moves[:4]:
    print(" ", mv)

# %% [markdown]
# A generator that already belongs to the set needs no moves.

# %%
w, cert = rewrite_in_lambda((1, 2, 3, 4), 5)
print(format_lambda_word(w, 5), cert.moves)

# %% [markdown]
# ## Every generator, n = 6
#
# Certificate lengths, and a tampered certificate being rejected.

# %%
from collections import Counter
from kmgroups.groups import quads_of
from kmgroups.rewrite import Certificate, Move

p = family_presentation("gamma_hat", 6)
lengths = Counter()
for q in quads_of(p):
    w, cert = rewrite_in_lambda(q, 6)
    assert verify_certificate(cert, p)
    lengths[len(cert.moves)] += 1
print(sorted(lengths.items()))

_, cert = rewrite_in_lambda((2, 4, 5, 6), 6)
m = cert.moves[0]
bent = Certificate(cert.start, (Move(m.kind, m.position, m.relator, not m.invert, m.rotation),) + cert.moves[1:], cert.end)
print("tampered verifies:", verify_certificate(bent, p))
