# %% [markdown]
# # Closed subsets of the alcove
#
# A closed subset contains 0, is stable under duals and absorbs every summand
# of the fusion product of two members. Enumeration builds all of them as joins
# of singleton closures, then tags each with its family.

# %%
from collections import Counter

from weylalcove import alcove_context
from weylalcove.closed_subsets import closure, enumerate_closed, min_fusion_power_containing_zero
from weylalcove.notation import format_weight


def show(ctx):
    print(f"{ctx.rs.algebra} at level {ctx.level}: {len(ctx)} weights")
    for s in enumerate_closed(ctx):
        print("  {" + ", ".join(format_weight(w) for w in s.members) + "}", s.classification)


# %% [markdown]
# ## E7 and E8 at level 2
# Besides the coset and simple-current families, each has level-2 exceptions.

# %%
show(alcove_context("E7", 2))
show(alcove_context("E8", 2))

# %% [markdown]
# ## A type-B exception
# For B4, 2l+1 = 9 = 3·3 and the closure of λ3 is a proper subset that is
# neither a coset set nor a set of simple currents.

# %%
b4 = alcove_context("B4", 2)
s = closure(b4, [b4.rs.fundamental(3)])
print([format_weight(w) for w in s.members])
show(b4)

# %% [markdown]
# ## How many subsets, by family, across a few small cases

# %%
for name, k in [("A1", 8), ("A2", 4), ("A3", 3), ("D4", 2), ("G2", 2)]:
    ctx = alcove_context(name, k)
    tags = Counter(s.classification.variant for s in enumerate_closed(ctx))
    print(name, k, dict(tags))

# %% [markdown]
# ## Powers reaching the unit
# Every weight reaches 0 in some fusion power, well inside twice the alcove size.

# %%
ctx = alcove_context("A2", 4)
print({format_weight(w): min_fusion_power_containing_zero(ctx, w, 2 * len(ctx)) for w in ctx.alcove})
