"""
Sparse random graphs without short cycles
=========================================

Sample G(n, d/n), delete every edge that sits on a cycle shorter than g, then
drop vertices whose degree is far above d.  What is left has girth at least g
and bounded maximum degree.
"""

# %%
import math
import time

from distedge import girth, random_high_girth

n, d = 2000, 8
cap = d + d / math.log(d)

# %%
for target in (4, 5, 6):
    for seed in range(3):
        start = time.perf_counter()
        g = random_high_girth(n, d, target, seed)
        took = time.perf_counter() - start
        print(
            f"girth>={target} seed={seed}: n={g.n} m={g.m} max degree {g.max_degree()} (< {cap:.2f}) "
            f"girth {girth(g)}  {took:.2f}s"
        )

# %%
# The same seed always gives the same graph.
assert random_high_girth(n, d, 5, 1) == random_high_girth(n, d, 5, 1)
