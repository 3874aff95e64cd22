"""
Graphs that need many colours
=============================

A handful of small graphs have conflict graphs that are complete, so every
edge needs its own colour.  The exact solver confirms this, and a single
edge already forms a maximum distance-t matching, so m / 1 is a matching
lower bound.
"""

# %%
import time

from distedge import (
    blown_up_c5,
    bound_report,
    complete_bipartite,
    conflict_graph,
    distance_matching,
    exact_chromatic,
    projective_plane_incidence,
)

cases = [
    ("K3,3", complete_bipartite(3, 3), 2),
    ("blown-up C5, s=1", blown_up_c5(1), 2),
    ("blown-up C5, s=2", blown_up_c5(2), 2),
    ("blown-up C5, s=3", blown_up_c5(3), 2),
    ("Heawood", projective_plane_incidence(2), 3),
]

# %%
for name, g, t in cases:
    start = time.perf_counter()
    cg = conflict_graph(g, t)
    res = exact_chromatic(cg)
    rep = bound_report(g, t, res.colouring, distance_matching(g, t, "exact", cg=cg))
    took = time.perf_counter() - start
    big = g.max_degree()
    print(f"{name:18} t={t} D={big} m={g.m:3}  colours={rep.achieved:3}  lower={rep.lower_bound:3}  ({took:.2f}s)")

# %%
# The values line up with D^2 for K3,3, 5 D^2 / 4 for the blown-up pentagon
# and D^3 - D^2 + D for the Heawood graph at distance 3.
