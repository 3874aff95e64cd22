"""Small test graphs: named families plus seeded random graphs."""

from __future__ import annotations

import random

from distedge import build_graph, complete_bipartite, cycle, path, petersen, projective_plane_incidence
from distedge.constructions import blown_up_c5, hamming


def random_graph(n, p, seed):
    rng = random.Random(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return build_graph(n, pairs)


def named_graphs():
    return {
        "K2": path(2),
        "P3": path(3),
        "P5": path(5),
        "K3": cycle(3),
        "C4": cycle(4),
        "C5": cycle(5),
        "C6": cycle(6),
        "C7": cycle(7),
        "star4": build_graph(5, [(0, i) for i in range(1, 5)]),
        "K4": build_graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)]),
        "K33": complete_bipartite(3, 3),
        "K23": complete_bipartite(2, 3),
        "petersen": petersen(),
        "blownC5_1": blown_up_c5(1),
        "H23": hamming(2, 3),
        "H32": hamming(3, 2),
        "heawood": projective_plane_incidence(2),
        "two_triangles": build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]),
        "tree": build_graph(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]),
        "empty3": build_graph(3, []),
    }


def random_graphs(count=40, max_n=10, seed=2024):
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(2, max_n)
        p = rng.choice([0.2, 0.3, 0.45, 0.6])
        out.append((f"rand{i}", random_graph(n, p, rng.randrange(10**9))))
    return out


def corpus(max_vertices=None):
    items = list(named_graphs().items()) + random_graphs()
    if max_vertices is not None:
        items = [(k, g) for k, g in items if g.n <= max_vertices]
    return items
