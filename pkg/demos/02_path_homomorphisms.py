# %% [markdown]
# # Counting maps between paths
#
# Anchored counts for homomorphisms (walks) and weak homomorphisms
# (walks that may pause), by closed form and by transfer-matrix DP.

# %%
from whomcount import hom_anchored, hom_anchored_reduced, path_walk_dp, whom_anchored, whom_total
from whomcount.tables import TableSpec, render

print(whom_anchored(4, 5, 0), whom_anchored(4, 5, 1))  # 13 22
print(hom_anchored(8, 8, 3), hom_anchored_reduced(8, 8, 3))  # 103 103

# %% [markdown]
# The closed forms and the DP agree; the DP also covers m > n, where the
# weak closed form does not apply.

# %%
print(whom_anchored(12, 5, 2), path_walk_dp(12, 5, 2, allow_stay=True))
print(whom_total(4, 5))  # 13 + 22 + 25 + 22 + 13

# %% [markdown]
# The published tables, rebuilt from scratch.

# %%
print(render(TableSpec("whom-path", "md")))
print(render(TableSpec("hom-path", "md")))

# %% [markdown]
# Counts are Python ints, so large parameters stay exact.

# %%
print(whom_anchored(200, 200, 100))
