# %% [markdown]
# # Twists, quantum dimensions and degenerate objects
#
# For each closed subset we compute the twist exponent t (the twist is
# exp(iπt)), quantum dimensions from the sine product, and the Hopf-link
# S-matrix. A member is degenerate when its double braiding with every member
# is trivial; the degenerate objects decide whether the subset is modular,
# modular after a quotient, or only spin-modular.

# %%
import numpy as np

from weylalcove import alcove_context
from weylalcove.modular import modularity_report, qdim, s_matrix, twist_exponent, verify_s_identities
from weylalcove.notation import format_weight

# %% [markdown]
# ## Verdicts for the level-2 exceptional sets

# %%
e7 = alcove_context("E7", 2)
e8 = alcove_context("E8", 2)
b13 = alcove_context("B13", 2)
L = lambda ctx, *ix: tuple(sum(1 for j in ix if j == i + 1) for i in range(ctx.rs.rank))
cases = [
    (e7, [L(e7), L(e7, 6)]),
    (e7, [L(e7), L(e7, 2), L(e7, 7, 7)]),
    (e8, [L(e8), L(e8, 1)]),
    (b13, [L(b13), L(b13, 1, 1), L(b13, 3), L(b13, 6), L(b13, 9), L(b13, 12)]),
]
for ctx, members in cases:
    v = modularity_report(ctx, members)
    print(ctx.rs.algebra, [format_weight(w) for w in members])
    print("   twists:", [str(twist_exponent(ctx, w)) for w in members])
    print("   degenerate:", [(format_weight(d.weight), d.parity, d.invertible) for d in v.degenerates])
    print("   ring:", v.ring, "| verdict:", v.verdict)

# %% [markdown]
# ## The S-matrix of the whole E7 level-2 alcove
# The first row is the vector of quantum dimensions, and the matrix is
# invertible, so the full alcove is modular.

# %%
S = s_matrix(e7)
np.set_printoptions(precision=4, suppress=True)
print(S.real)
print([round(qdim(e7, w), 6) for w in e7.alcove])
print(verify_s_identities(e7).ok, abs(np.linalg.det(S)))
