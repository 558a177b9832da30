# %% [markdown]
# # Lattice paths and weak homomorphisms of paths
#
# A weak homomorphism f: P_m -> P_n is a sequence of m vertices where each
# step goes right, left, or stays.  Record the steps as moves along three
# axes and f becomes a monotone lattice path of length m - 1.

# %%
from whomcount.lattice import LatticePoint, ladder_dp_count, ladder_shortest_path_count, shortest_path_count

# Unrestricted: 3 steps, one of each kind.
print(shortest_path_count(LatticePoint(1, 1, 1)))  # 6

# %% [markdown]
# Starting at vertex j of P_n, the walker may take at most j net left steps
# before falling off the end.  That is the j-ladder lattice, counted by a
# reflection.  A brute-force DP over the lattice gives the same number.

# %%
for r, p in [(0, (2, 1, 0)), (0, (1, 1, 1)), (1, (1, 2, 0))]:
    print(r, p, ladder_shortest_path_count(r, p), ladder_dp_count(r, p))

# %% [markdown]
# Summing over endpoints with 3 steps reproduces |WHom^0(P_4, P_5)| = 13.
# The far wall of P_5 is out of reach in 3 steps from 0, so only the
# 0-ladder matters.

# %%
total = sum(
    ladder_shortest_path_count(0, (i, j, 3 - i - j))
    for i in range(4)
    for j in range(4 - i)
)
print(total)  # 13
