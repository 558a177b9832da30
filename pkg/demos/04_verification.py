# %% [markdown]
# # Checking formulas against explicit graphs
#
# The oracle module builds P_n and P_n □ P_k as adjacency lists and counts
# maps either one by one or by repeated adjacency products.

# %%
from whomcount.oracle import brute_force_count, dp_walk_count, grid_graph, grid_vertex

g = grid_graph(4, 5)
print(brute_force_count(4, g, grid_vertex(5, 0, 0), weak=True))  # 43
print(dp_walk_count(8, grid_graph(8, 8), weak=True))  # 2951832

# %% [markdown]
# `run_verification` sweeps a box of parameters and compares every closed
# form with an oracle.  The same report is printed by
# `whomcount verify --max-m 8 --max-n 8 --max-k 8 --mode dp`.

# %%
from whomcount.verify import run_verification

report = run_verification(6, 5, 5, mode="both")
print(report.to_json()["summary"])
print(report.failures)  # []
