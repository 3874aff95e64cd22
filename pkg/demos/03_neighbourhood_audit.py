"""
Looking inside one conflict neighbourhood
=========================================

Pick a root edge.  Its conflict neighbourhood is every other edge within
distance t.  The audit counts how many conflicting pairs live inside that
neighbourhood, compares with (2 - 2 delta) D^(2t), and splits the
neighbourhood into heavy edges (close to the root) and light ones.
"""

# %%
from distedge import distance_layers, heavy_light_audit, projective_plane_incidence, sparsity_audit, walk_census

g = projective_plane_incidence(3)
root, t = 0, 2

layers = distance_layers(g, root, t)
print("layer sizes:", layers.sizes())

# %%
rep = sparsity_audit(g, root, t)
print(f"neighbourhood edges {rep.n_hat}, conflicting pairs inside {rep.s_hat}, bound {float(rep.bound):.1f}")
print("within bound:", rep.passed)

# %%
hl = heavy_light_audit(g, root, t)
print("claims:", hl.claims)
print(f"heavy {hl.heavy_count} <= {hl.heavy_bound};  worst light edge sees {hl.max_light_conflicts} <= {hl.light_bound}")

# %%
# Walk counts give the same pair count by a different route.
census = walk_census(g, root, t)
print("walks inside:", census.walks_inside, " tau sum:", census.tau_sum)
assert census.tau_sum == census.walks_inside - (2 * rep.s_hat + rep.n_hat)
