"""Walk counts and neighbourhood audits around a root edge.

Walks are directed vertex/edge sequences ``(v0, e1, v1, ..., el, vl)`` with
``l >= 1``; a single edge therefore gives two walks of length 1, one per
orientation.  Counting is a length-layered dynamic programme over *arcs*
(oriented edges): arc ``2*e`` runs ``edges[e][0] -> edges[e][1]`` and arc
``2*e + 1`` the other way.

The audits compute, for one root edge of the base graph, the conflict-graph
neighbourhood, the number of conflict edges inside it, the vertex layers at
each distance from the root and the heavy/light edge split used for graphs
of girth at least ``2t + 1``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .graph import Graph, bfs_distances, edge_ball, girth

__all__ = [
    "DEFAULT_DELTA",
    "DistanceLayers",
    "SparsityReport",
    "HeavyLightReport",
    "WalkCensus",
    "count_walks",
    "walk_counts_from",
    "tau",
    "sigma",
    "sigma_via",
    "sigma_from",
    "conflict_neighbourhood",
    "distance_layers",
    "b_t_set",
    "sparsity_audit",
    "heavy_light_audit",
    "walk_census",
    "audit_report",
]

DEFAULT_DELTA = Fraction(1, 618)


def _head(g: Graph, arc: int) -> int:
    return g.edges[arc >> 1][1 - (arc & 1)]


def _out_arcs(g: Graph, v: int) -> list[int]:
    return [2 * e + (0 if g.edges[e][0] == v else 1) for _, e in g.adjacency[v]]


def _layers(g: Graph, start: dict[int, int], lmax: int):
    """Yield ``{arc: number of walks of length l ending on arc}`` for l = 1..lmax."""
    cur = dict(start)
    for length in range(1, lmax + 1):
        if length > 1:
            nxt: dict[int, int] = defaultdict(int)
            for arc, c in cur.items():
                for b in _out_arcs(g, _head(g, arc)):
                    nxt[b] += c
            cur = nxt
        yield cur


def count_walks(g: Graph, X: Iterable[int], Y: Iterable[int], lmax: int) -> int:
    """Number of walks of length 1..lmax whose first edge is in X and last edge in Y."""
    if lmax < 1:
        raise ValueError(f"lmax must be at least 1, got {lmax}")
    X, Y = set(X), set(Y)
    if not X or not Y:
        return 0
    start = {2 * e + s: 1 for e in X for s in (0, 1)}
    return sum(
        c for layer in _layers(g, start, lmax) for arc, c in layer.items() if arc >> 1 in Y
    )


def walk_counts_from(g: Graph, e: int, lmax: int) -> dict[int, int]:
    """``{f: w_lmax(e, f)}`` for every edge f reachable by a walk starting with e."""
    out: dict[int, int] = defaultdict(int)
    for layer in _layers(g, {2 * e: 1, 2 * e + 1: 1}, lmax):
        for arc, c in layer.items():
            out[arc >> 1] += c
    return dict(out)


def tau(g: Graph, e: int, f: int, t: int) -> int:
    """``max(w_{t+1}(e, f) - 1, 0)``: walks joining e and f beyond the first."""
    if t < 1:
        raise ValueError(f"t must be at least 1, got {t}")
    return max(count_walks(g, [e], [f], t + 1) - 1, 0)


def sigma_from(g: Graph, nhat: Iterable[int], u: int, t: int) -> dict[int, int]:
    """``{v: sigma_t(u, v)}``: u-v walks of length <= t whose first edge lies in ``nhat``."""
    nhat = set(nhat)
    start = {a: 1 for a in _out_arcs(g, u) if a >> 1 in nhat}
    out: dict[int, int] = defaultdict(int)
    if start:
        for layer in _layers(g, start, t):
            for arc, c in layer.items():
                out[_head(g, arc)] += c
    return dict(out)


def sigma(g: Graph, nhat: Iterable[int], u: int, v: int, t: int) -> int:
    if t < 1:
        raise ValueError(f"t must be at least 1, got {t}")
    return sigma_from(g, nhat, u, t).get(v, 0)


def sigma_via(g: Graph, nhat: Iterable[int], u: int, f: int, v: int, t: int) -> int:
    """As :func:`sigma` with the additional requirement that the last edge is ``f``.

    Zero unless ``f`` is incident with ``v``.  Summed over ``f`` in ``G(v)``
    this recovers ``sigma(u, v)``.
    """
    if t < 1:
        raise ValueError(f"t must be at least 1, got {t}")
    a, b = g.edges[f]
    if v not in (a, b):
        return 0
    into_v = 2 * f + (0 if b == v else 1)
    nhat = set(nhat)
    start = {arc: 1 for arc in _out_arcs(g, u) if arc >> 1 in nhat}
    if not start:
        return 0
    return sum(layer.get(into_v, 0) for layer in _layers(g, start, t))


def conflict_neighbourhood(g: Graph, root: int, t: int) -> set[int]:
    """Edges at edge-distance 1..t from ``root`` (the root itself excluded)."""
    ball = edge_ball(g, root, t)
    del ball[root]
    return set(ball)


@dataclass(frozen=True)
class DistanceLayers:
    """Vertex sets ``A_0..A_t`` at distance 0..t from a root edge."""

    root: int
    t: int
    layers: tuple[frozenset[int], ...]

    @property
    def inner(self) -> frozenset[int]:
        """``A_0 | ... | A_{t-1}``."""
        return frozenset().union(*self.layers[: self.t])

    def sizes(self) -> list[int]:
        return [len(a) for a in self.layers]

    def layer_of(self) -> dict[int, int]:
        return {v: i for i, a in enumerate(self.layers) for v in a}


def distance_layers(g: Graph, root: int, t: int) -> DistanceLayers:
    if t < 1:
        raise ValueError(f"t must be at least 1, got {t}")
    dist = bfs_distances(g, g.edges[root], limit=t)
    layers = [set() for _ in range(t + 1)]
    for v, d in dist.items():
        layers[d].add(v)
    return DistanceLayers(root, t, tuple(frozenset(a) for a in layers))


def _nhat_degrees(g: Graph, nhat: set[int]) -> dict[int, int]:
    deg: dict[int, int] = defaultdict(int)
    for e in nhat:
        a, b = g.edges[e]
        deg[a] += 1
        deg[b] += 1
    return deg


def b_t_set(g: Graph, root: int, t: int) -> set[int]:
    """Vertices of ``A_t`` meeting at least ``max_degree / 2`` edges of the neighbourhood."""
    layers = distance_layers(g, root, t)
    deg = _nhat_degrees(g, conflict_neighbourhood(g, root, t))
    big = g.max_degree()
    return {u for u in layers.layers[t] if 2 * deg.get(u, 0) >= big}


def _count_spanning(g: Graph, members: set[int], t: int) -> int:
    twice = 0
    for f in members:
        ball = edge_ball(g, f, t)
        twice += sum(1 for h in ball if h != f and h in members)
    return twice // 2


def _check_delta(delta) -> Fraction:
    d = Fraction(delta)
    if not 0 < d < 1:
        raise ValueError(f"delta must lie strictly between 0 and 1, got {delta}")
    return d


@dataclass(frozen=True)
class SparsityReport:
    root: int
    t: int
    n_hat: int
    s_hat: int
    delta: Fraction
    bound: Fraction
    passed: bool
    b_t_size: int
    max_degree: int

    @property
    def clique_edges(self) -> int:
        return self.n_hat * (self.n_hat - 1) // 2


def sparsity_audit(g: Graph, root: int, t: int, delta=DEFAULT_DELTA) -> SparsityReport:
    """Count conflict edges spanning the neighbourhood of ``root`` against ``(2 - 2 delta) D^(2t)``.

    ``passed`` is informational at small degree: the bound is only claimed
    for sufficiently large maximum degree.
    """
    if t < 1:
        raise ValueError(f"t must be at least 1, got {t}")
    d = _check_delta(delta)
    nhat = conflict_neighbourhood(g, root, t)
    s_hat = _count_spanning(g, nhat, t)
    big = g.max_degree()
    bound = (2 - 2 * d) * big ** (2 * t)
    return SparsityReport(
        root=root,
        t=t,
        n_hat=len(nhat),
        s_hat=s_hat,
        delta=d,
        bound=bound,
        passed=s_hat <= bound,
        b_t_size=len(b_t_set(g, root, t)),
        max_degree=big,
    )


@dataclass(frozen=True)
class HeavyLightReport:
    root: int
    t: int
    heavy: frozenset[int]
    light: frozenset[int]
    claim4: bool
    claim5: bool
    claim6: bool
    heavy_count: int
    heavy_bound: int
    max_light_conflicts: int
    light_bound: int
    girth_ok: bool
    light_in_top_layers: bool

    @property
    def claims(self) -> tuple[bool, bool, bool]:
        return (self.claim4, self.claim5, self.claim6)

    @property
    def within_bounds(self) -> bool:
        return self.heavy_count <= self.heavy_bound and self.max_light_conflicts <= self.light_bound


def heavy_light_audit(g: Graph, root: int, t: int) -> HeavyLightReport:
    """Heavy/light split around ``root`` and the three structural claims.

    An edge is heavy when its distance from the root is below ``t``.  The
    claims checked are: each ``A_{t-1}`` vertex meets at most one heavy edge;
    no light edge has both ends in ``A_{t-1}``; each ``A_t`` vertex has at
    most two neighbours in ``A_{t-1}``.  All three hold whenever the girth is
    at least ``2t + 1``; below that they are only reported.
    """
    if t < 2:
        raise ValueError(f"heavy/light audit needs t >= 2, got {t}")
    ball = edge_ball(g, root, t)
    heavy = frozenset(e for e, d in ball.items() if d < t)
    nhat = set(ball) - {root}
    light = frozenset(nhat - heavy)
    layers = distance_layers(g, root, t)
    prev, top = layers.layers[t - 1], layers.layers[t]

    claim4 = all(sum(1 for e in g.incident_edges(v) if e in heavy) <= 1 for v in prev)
    claim5 = all(
        not (g.edges[e][0] in prev and g.edges[e][1] in prev)
        for e in range(g.m)
        if e not in heavy
    )
    claim6 = all(sum(1 for w in g.neighbours(v) if w in prev) <= 2 for v in top)

    worst = 0
    for f in light:
        near = edge_ball(g, f, t)
        worst = max(worst, sum(1 for h in near if h != f and h in nhat))

    big = g.max_degree()
    gr = girth(g)
    top_edges = g.edges_between(prev, top)
    return HeavyLightReport(
        root=root,
        t=t,
        heavy=heavy,
        light=light,
        claim4=claim4,
        claim5=claim5,
        claim6=claim6,
        heavy_count=len(heavy & nhat),
        heavy_bound=2 * big ** (t - 1),
        max_light_conflicts=worst,
        light_bound=(3 * t + 2) * big ** (t - 1),
        girth_ok=gr is None or gr >= 2 * t + 1,
        light_in_top_layers=light <= top_edges,
    )


@dataclass(frozen=True)
class WalkCensus:
    """Walk totals around one root, for inspecting the sparsity argument numerically.

    ``tau_sum`` and ``walks_inside`` satisfy the exact identity
    ``tau_sum == walks_inside - (2 * s_hat + n_hat)``.
    """

    root: int
    t: int
    n_hat: int
    s_hat: int
    tau_sum: int
    walks_inside: int
    walks_outside: int
    inner_size: int
    b_t_size: int
    sigma_total: int
    sigma_heavy: int
    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    @property
    def walks_total(self) -> int:
        return self.walks_inside + self.walks_outside


def walk_census(g: Graph, root: int, t: int, delta=DEFAULT_DELTA) -> WalkCensus:
    """Evaluate the walk sums of the neighbourhood-sparsity argument at one root.

    ``sigma_heavy`` sums ``sigma_t(u, v)`` over pairs in ``A | B_t`` with
    ``sigma_t(u, v) >= beta * D``.  Nothing is asserted here: the inequalities
    between these numbers are asymptotic.
    """
    d = _check_delta(delta)
    nhat = conflict_neighbourhood(g, root, t)
    s_hat = _count_spanning(g, nhat, t)
    inside = outside = tau_sum = 0
    for e in nhat:
        for f, w in walk_counts_from(g, e, t + 1).items():
            if f in nhat:
                inside += w
                tau_sum += max(w - 1, 0)
            else:
                outside += w

    alpha = 1 - 5 * d
    beta = alpha / 36
    gamma = beta / (2 * beta + 1)
    big = g.max_degree()
    layers = distance_layers(g, root, t)
    pool = set(layers.inner) | b_t_set(g, root, t)
    total = heavy = 0
    for u in pool:
        for v, s in sigma_from(g, nhat, u, t).items():
            if v in pool:
                total += s
                if s >= beta * big:
                    heavy += s
    return WalkCensus(
        root=root,
        t=t,
        n_hat=len(nhat),
        s_hat=s_hat,
        tau_sum=tau_sum,
        walks_inside=inside,
        walks_outside=outside,
        inner_size=len(layers.inner),
        b_t_size=len(pool) - len(layers.inner),
        sigma_total=total,
        sigma_heavy=heavy,
        alpha=alpha,
        beta=beta,
        gamma=gamma,
    )


def audit_report(g: Graph, root: int, t: int, delta=DEFAULT_DELTA) -> dict:
    """Combined audit for one root as a JSON-ready dict.

    Heavy/light fields are ``None`` when ``t == 1``.
    """
    sp = sparsity_audit(g, root, t, delta)
    layers = distance_layers(g, root, t)
    hl = heavy_light_audit(g, root, t) if t >= 2 else None
    return {
        "root": root,
        "t": t,
        "delta": float(sp.delta),
        "nHat": sp.n_hat,
        "sHat": sp.s_hat,
        "bound": float(sp.bound),
        "pass": sp.passed,
        "bTSize": sp.b_t_size,
        "layersSizes": layers.sizes(),
        "heavyCount": hl.heavy_count if hl else None,
        "claim4": hl.claim4 if hl else None,
        "claim5": hl.claim5 if hl else None,
        "claim6": hl.claim6 if hl else None,
        "maxLightConflicts": hl.max_light_conflicts if hl else None,
    }
