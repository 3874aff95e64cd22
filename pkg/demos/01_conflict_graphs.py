"""
Conflict graphs for distance-t edge colouring
=============================================

Two edges conflict when they are within distance t of each other.  Colouring
edges so that conflicting edges differ is just vertex colouring of the
conflict graph.
"""

# %%
from distedge import conflict_graph, cycle, edge_distance, line_graph, petersen
from distedge.graph import trivial_degree_bound

c6 = cycle(6)
for e, (u, v) in enumerate(c6.edges):
    print(e, (u, v), [edge_distance(c6, e, f) for f in range(c6.m)])

# %%
# At t=1 the conflict graph is the line graph.
assert conflict_graph(c6, 1).as_graph() == line_graph(c6)

# At t=2 every edge of C6 conflicts with all but the opposite edge.
cg = conflict_graph(c6, 2)
print("C6, t=2:", cg.n, "vertices,", cg.num_edges, "edges, max degree", cg.max_degree)

# %%
# Degrees in the conflict graph never exceed 2 * sum_{j=1..t} (D-1)^j.
g = petersen()
for t in (1, 2, 3):
    cg = conflict_graph(g, t)
    print(f"petersen t={t}: max conflict degree {cg.max_degree}, bound {trivial_degree_bound(g.max_degree(), t)}")
