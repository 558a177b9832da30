# %% [markdown]
# # Weak homomorphisms into rectangular grids
#
# A map P_m -> P_n □ P_k moves one coordinate per step (or stays).  Pull
# out the h steps that move the first coordinate: they form a walk on
# P_n, the rest a weak homomorphism into P_k, shuffled in C(m-1, h) ways.

# %%
from whomcount import binomial, hom_anchored, whom_anchored, whom_grid_anchored

m, n, k = 4, 4, 5
for h in range(m):
    terms = binomial(m - 1, h), hom_anchored(h + 1, n, 0), whom_anchored(m - h, k, 0)
    print(h, terms, terms[0] * terms[1] * terms[2])
print(whom_grid_anchored(m, n, k, 0, 0))  # 43

# %% [markdown]
# Reflections of the grid permute anchors without changing counts, so a
# total only needs one quadrant plus the midlines.

# %%
from whomcount import anchor_orbit, whom_grid_total, whom_grid_total_direct

print(sorted(anchor_orbit(4, 5, 0, 0)))
print(whom_grid_total(5, 6, 7), whom_grid_total_direct(5, 6, 7))  # 17048 both

# %%
from whomcount.tables import TableSpec, render

print(render(TableSpec("whom-grid", "md")))
