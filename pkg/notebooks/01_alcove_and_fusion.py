# %% [markdown]
# # Alcoves and truncated tensor products
#
# The level-k alcove holds the dominant weights whose pairing with the highest
# root is at most k. Fusion folds each weight of an ordinary tensor product back
# into the alcove with the rho-shifted affine Weyl group, keeping signs.

# %%
import numpy as np

from weylalcove import alcove_context, fusion_product
from weylalcove.fusion import affine_to_alcove, dual_weight
from weylalcove.notation import format_vector, format_weight

# %% [markdown]
# ## E7 at level 2
# Six weights; the simple current 2λ7 swaps θ and λ6.

# %%
e7 = alcove_context("E7", 2)
print([format_weight(w) for w in e7.alcove])
lam7 = e7.rs.fundamental(7)
print("λ7 ⊗ λ7 =", format_vector(fusion_product(e7, lam7, lam7)))
print("2λ7 ⊗ θ =", format_vector(fusion_product(e7, e7.rs.fundamental(7, 2), e7.rs.theta)))

# %% [markdown]
# ## Folding in rank one
# For sl2 at level 2, 3λ1 lies on the affine wall and drops out, while 4λ1
# reflects onto 2λ1 with a sign.

# %%
a1 = alcove_context("A1", 2)
for n in range(6):
    print(n, affine_to_alcove(a1, (n,)))

# %% [markdown]
# ## The full fusion matrix of one weight
# Row i of N_λ lists the multiplicities of each alcove weight in λ ⊗ (weight i).
# Its largest eigenvalue is the quantum dimension of λ.

# %%
a2 = alcove_context("A2", 3)
lam = (1, 0)
n = len(a2)
N = np.zeros((n, n), dtype=int)
for i, w in enumerate(a2.alcove):
    for v, m in fusion_product(a2, lam, w).items():
        N[i, a2.index[v]] = m
print(N)
print("Perron-Frobenius eigenvalue:", max(abs(np.linalg.eigvals(N))))
print("dual of λ1:", format_weight(dual_weight(a2, lam)))
