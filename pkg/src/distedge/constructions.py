"""Graph families with known distance-t chromatic behaviour, and a random high-girth generator."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .graph import Graph, build_graph

__all__ = [
    "FAMILIES",
    "ConstructionSpec",
    "build",
    "cycle",
    "path",
    "complete_bipartite",
    "blown_up_c5",
    "hamming",
    "petersen",
    "projective_plane_incidence",
    "random_high_girth",
    "short_cycle_edges",
    "default_degree",
    "k_t_formula",
]

HAMMING_MAX_VERTICES = 100_000


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path on ``n`` vertices (``n - 1`` edges)."""
    if n < 2:
        raise ValueError(f"path needs n >= 2, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}``: vertices ``0..a-1`` on one side, ``a..a+b-1`` on the other."""
    if a < 1 or b < 1:
        raise ValueError(f"complete_bipartite needs a, b >= 1, got ({a}, {b})")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def blown_up_c5(s: int) -> Graph:
    """Five independent sets of size ``s`` joined completely around a 5-cycle.

    ``2s``-regular with ``5 s^2`` edges; every pair of edges is within
    distance 2, so its strong chromatic index is ``5 s^2``.
    """
    if s < 1:
        raise ValueError(f"part size must be at least 1, got {s}")
    pairs = []
    for part in range(5):
        nxt = (part + 1) % 5
        for i in range(s):
            for j in range(s):
                pairs.append((part * s + i, nxt * s + j))
    return build_graph(5 * s, pairs)


def hamming(d: int, q: int, max_vertices: int = HAMMING_MAX_VERTICES) -> Graph:
    """Hamming graph ``H(d, q)``: words of length d over q symbols, adjacent at Hamming distance 1."""
    if d < 1 or q < 2:
        raise ValueError(f"hamming needs d >= 1 and q >= 2, got d={d}, q={q}")
    size = q**d
    if size > max_vertices:
        raise ValueError(f"H({d},{q}) has {size} vertices, above the cap of {max_vertices}")
    words = list(itertools.product(range(q), repeat=d))
    index = {w: i for i, w in enumerate(words)}
    pairs = []
    for i, w in enumerate(words):
        for pos in range(d):
            for sym in range(w[pos] + 1, q):
                pairs.append((i, index[w[:pos] + (sym,) + w[pos + 1 :]]))
    return build_graph(size, pairs)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % p for p in range(2, math.isqrt(q) + 1))


def _projective_points(q: int) -> list[tuple[int, int, int]]:
    # first nonzero coordinate scaled to 1
    pts = []
    for x in range(q):
        for y in range(q):
            pts.append((1, x, y))
    for y in range(q):
        pts.append((0, 1, y))
    pts.append((0, 0, 1))
    return pts


def projective_plane_incidence(q: int) -> Graph:
    """Point-line incidence graph of the projective plane over the integers mod a prime ``q``.

    Points are vertices ``0..N-1`` and lines ``N..2N-1`` with
    ``N = q^2 + q + 1``.  The graph is ``(q+1)``-regular, bipartite, of girth 6.
    ``q = 2`` gives the Heawood graph.
    """
    if not _is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    pts = _projective_points(q)
    big_n = len(pts)
    pairs = []
    for i, p in enumerate(pts):
        for j, line in enumerate(pts):
            if (p[0] * line[0] + p[1] * line[1] + p[2] * line[2]) % q == 0:
                pairs.append((i, big_n + j))
    return build_graph(2 * big_n, pairs)


def short_cycle_edges(g: Graph, length: int) -> set[int]:
    """Edge ids lying on some cycle shorter than ``length``.

    Edge ``uv`` is on such a cycle iff ``u`` and ``v`` are joined by a path of
    at most ``length - 2`` edges avoiding ``uv``; found by two BFS balls that
    skip the edge and meet in the middle.
    """
    budget = length - 2
    if budget < 2:
        return set()
    left_depth = (budget + 1) // 2
    right_depth = budget - left_depth
    marked = set()
    for eid, (u, v) in enumerate(g.edges):
        du = _ball_without(g, u, eid, left_depth)
        dv = _ball_without(g, v, eid, right_depth)
        if len(du) > len(dv):
            du, dv = dv, du
        if any(x in dv and d + dv[x] <= budget for x, d in du.items()):
            marked.add(eid)
    return marked


def _ball_without(g: Graph, src: int, skip: int, depth: int) -> dict[int, int]:
    dist = {src: 0}
    frontier = [src]
    for d in range(1, depth + 1):
        nxt = []
        for x in frontier:
            for y, eid in g.adjacency[x]:
                if eid != skip and y not in dist:
                    dist[y] = d
                    nxt.append(y)
        frontier = nxt
    return dist


def random_high_girth(n: int, d: float, g: int, seed: int) -> Graph:
    """Sample ``G(n, d/n)``, strip every edge on a cycle shorter than ``g``,
    then delete every vertex of degree at least ``d + d / ln d``.

    Surviving vertices are relabelled ``0..n'-1`` in their original order.
    The result always has girth at least ``g`` and maximum degree below
    ``d + d / ln d``.
    """
    if g < 3 or n < g:
        raise ValueError(f"need n >= g >= 3, got n={n}, g={g}")
    if d < 2:
        raise ValueError(f"target degree must be at least 2, got {d}")
    p = d / n
    rng = np.random.default_rng(seed)
    pairs = []
    for i in range(n - 1):
        hits = np.flatnonzero(rng.random(n - 1 - i) < p)
        pairs.extend((i, i + 1 + int(j)) for j in hits)
    graph = build_graph(n, pairs)

    while True:
        marked = short_cycle_edges(graph, g)
        if not marked:
            break
        graph = build_graph(n, [e for k, e in enumerate(graph.edges) if k not in marked])

    threshold = d + d / math.log(d)
    keep = [v for v in range(n) if graph.degree(v) < threshold]
    out, _ = graph.induced_subgraph(keep)
    return out


def default_degree(n: int, g: int) -> float:
    """``(ln n)^(1/(g+1))``, the asymptotic degree choice for the random construction."""
    return math.log(n) ** (1 / (g + 1))


def k_t_formula(n: float, d: float, t: int, eps: float) -> float:
    """``n / (2 d^(t-1)) * (t ln d - ln ln d - ln(e t) + eps)``, natural logs."""
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")
    if not d > 1 or not math.log(d) > 1:
        raise ValueError(f"need ln d > 1 so that ln ln d is positive, got d={d}")
    return n / (2 * d ** (t - 1)) * (t * math.log(d) - math.log(math.log(d)) - math.log(math.e * t) + eps)


FAMILIES = {
    "cycle": (cycle, ("n",)),
    "path": (path, ("n",)),
    "completeBipartite": (complete_bipartite, ("a", "b")),
    "blownUpC5": (blown_up_c5, ("s",)),
    "hamming": (hamming, ("d", "q")),
    "projectivePlane": (projective_plane_incidence, ("q",)),
    "randomHighGirth": (random_high_girth, ("n", "d", "g", "seed")),
    "petersen": (petersen, ()),
}


@dataclass(frozen=True)
class ConstructionSpec:
    """A named family plus its parameters; ``seed`` is used by ``randomHighGirth`` only."""

    family: str
    parameters: dict = field(default_factory=dict)
    seed: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {sorted(FAMILIES)}")
        _, names = FAMILIES[self.family]
        wanted = [x for x in names if x != "seed"]
        missing = [x for x in wanted if x not in self.parameters]
        extra = [x for x in self.parameters if x not in wanted]
        if missing or extra:
            raise ValueError(f"{self.family} takes parameters {wanted}; missing {missing}, unexpected {extra}")
        if "seed" in names and self.seed is None:
            raise ValueError(f"{self.family} needs a seed")


def build(spec: ConstructionSpec) -> Graph:
    fn, names = FAMILIES[spec.family]
    kwargs = dict(spec.parameters)
    if "seed" in names:
        kwargs["seed"] = spec.seed
    return fn(**kwargs)
