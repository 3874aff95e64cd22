"""
Comparing colourers
===================

Greedy, DSATUR, exact branch-and-bound and random resampling on the same
conflict graphs, next to the matching lower bound and the trivial upper bound.
"""

# %%
from distedge import (
    bound_report,
    conflict_graph,
    distance_matching,
    dsatur_colour,
    exact_chromatic,
    greedy_colour,
    hamming,
    petersen,
    projective_plane_incidence,
    random_high_girth,
    resample_colour,
)

graphs = {
    "petersen": petersen(),
    "rook 3x3": hamming(2, 3),
    "PG(2,3) incidence": projective_plane_incidence(3),
    "random girth>=5": random_high_girth(100, 4, 5, 0),
}

# %%
for name, g in graphs.items():
    for t in (2, 3):
        cg = conflict_graph(g, t)
        nu = distance_matching(g, t, "exact", budget=100_000, cg=cg)
        results = {
            "greedy": greedy_colour(cg),
            "dsatur": dsatur_colour(cg),
            "exact": exact_chromatic(cg, budget=100_000).colouring,
            "resample": resample_colour(cg, cg.max_degree + 1, seed=0, max_rounds=20_000),
        }
        counts = {k: (c.colour_count if c is not None else "-") for k, c in results.items()}
        rep = bound_report(g, t, results["dsatur"], nu)
        print(f"{name:18} t={t}  lower={rep.lower_bound}  {counts}  trivial={rep.trivial_upper}")

# %%
# From the command line the same sweep is:  distedge bench --ts 2,3
