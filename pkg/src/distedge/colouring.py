"""Distance-t edge colourers, distance-t matchings and bound reporting.

Every colourer works on a :class:`~distedge.graph.ConflictGraph`; a proper
vertex colouring of it is exactly a distance-t edge colouring of the base
graph.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .graph import ConflictGraph, Graph, conflict_graph, edge_ball, trivial_degree_bound

__all__ = [
    "EPSILON",
    "Colouring",
    "MatchingResult",
    "ExactResult",
    "BoundReport",
    "verify_colouring",
    "greedy_colour",
    "dsatur_colour",
    "greedy_clique",
    "exact_chromatic",
    "resample_colour",
    "distance_matching",
    "max_independent_set",
    "bound_report",
    "read_colouring",
    "write_colouring",
    "parse_colouring",
    "format_colouring",
]

EPSILON = 0.00008
DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class Colouring:
    """Colour index (0-based) for each edge id."""

    assignment: Mapping[int, int]

    @classmethod
    def from_list(cls, colours: Sequence[int]) -> Colouring:
        return cls({e: int(c) for e, c in enumerate(colours)})

    @property
    def colour_count(self) -> int:
        return len(set(self.assignment.values()))

    def as_list(self, m: int) -> list[int]:
        return [self.assignment[e] for e in range(m)]

    def __getitem__(self, e: int) -> int:
        return self.assignment[e]


def verify_colouring(g: Graph, t: int, c: Colouring | Mapping[int, int]) -> list[tuple[int, int, int, int]]:
    """Return every ``(e, f, distance, colour)`` with ``e < f`` sharing a colour within distance t.

    An empty list means the colouring is valid.  Raises ``ValueError`` if an
    edge has no colour.
    """
    assignment = c.assignment if isinstance(c, Colouring) else c
    for e in range(g.m):
        if e not in assignment:
            raise ValueError(f"edge {e} {g.edges[e]} has no colour")
    bad = []
    for e in range(g.m):
        ce = assignment[e]
        for f, d in sorted(edge_ball(g, e, t).items()):
            if f > e and assignment[f] == ce:
                bad.append((e, f, d, ce))
    return bad


def greedy_colour(cg: ConflictGraph, order: Iterable[int] | None = None) -> Colouring:
    """First-fit colouring in the given order (edge-id order by default)."""
    order = list(range(cg.n)) if order is None else list(order)
    if sorted(order) != list(range(cg.n)):
        raise ValueError("order must be a permutation of the edge ids")
    colour = [-1] * cg.n
    for v in order:
        used = {colour[w] for w in cg.adjacency[v]}
        c = 0
        while c in used:
            c += 1
        colour[v] = c
    return Colouring.from_list(colour)


def dsatur_colour(cg: ConflictGraph) -> Colouring:
    """DSATUR: repeatedly colour the vertex of highest saturation.

    Ties go to higher degree, then to the lower edge id.
    """
    n = cg.n
    colour = [-1] * n
    seen: list[set[int]] = [set() for _ in range(n)]
    heap = [(0, -cg.degree(v), v) for v in range(n)]
    heapq.heapify(heap)
    while heap:
        neg_sat, neg_deg, v = heapq.heappop(heap)
        if colour[v] >= 0 or -neg_sat != len(seen[v]):
            continue
        c = 0
        while c in seen[v]:
            c += 1
        colour[v] = c
        for w in cg.adjacency[v]:
            if colour[w] < 0 and c not in seen[w]:
                seen[w].add(c)
                heapq.heappush(heap, (-len(seen[w]), -cg.degree(w), w))
    return Colouring.from_list(colour)


def _masks(cg: ConflictGraph) -> list[int]:
    out = []
    for nbrs in cg.adjacency:
        m = 0
        for w in nbrs:
            m |= 1 << w
        out.append(m)
    return out


def greedy_clique(cg: ConflictGraph) -> list[int]:
    """A large clique found by greedy extension from every start vertex."""
    adj = _masks(cg)
    best: list[int] = []
    for v in range(cg.n):
        clique = [v]
        cand = adj[v]
        while cand:
            w = max(_bits(cand), key=lambda x: ((adj[x] & cand).bit_count(), -x))
            clique.append(w)
            cand &= adj[w]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _BudgetExhausted(Exception):
    pass


@dataclass(frozen=True)
class ExactResult:
    chromatic: int
    colouring: Colouring
    optimal: bool
    lower_bound: int
    nodes: int


def exact_chromatic(cg: ConflictGraph, budget: int = DEFAULT_BUDGET) -> ExactResult:
    """Chromatic number by DSATUR-ordered branch and bound.

    Seeded with a DSATUR upper bound and a greedy clique lower bound.  If the
    search exceeds ``budget`` nodes the best colouring so far is returned
    with ``optimal=False``.
    """
    n = cg.n
    if n == 0:
        return ExactResult(0, Colouring({}), True, 0, 0)
    seed = dsatur_colour(cg)
    best_k = seed.colour_count
    best = seed.as_list(n)
    lb = len(greedy_clique(cg))
    if lb == best_k:
        return ExactResult(best_k, seed, True, lb, 0)

    adj = cg.adjacency
    deg = [len(a) for a in adj]
    colour = [-1] * n
    forbidden = [0] * n
    nodes = 0

    def search(done: int, used: int) -> None:
        nonlocal nodes, best_k, best
        nodes += 1
        if nodes > budget:
            raise _BudgetExhausted
        if done == n:
            best_k = used
            best = colour[:]
            return
        v, key = -1, None
        for x in range(n):
            if colour[x] < 0:
                k = (forbidden[x].bit_count(), deg[x])
                if key is None or k > key:
                    v, key = x, k
        options = [c for c in range(used) if not forbidden[v] >> c & 1]
        if used + 1 < best_k:
            options.append(used)
        for c in options:
            if max(used, c + 1) >= best_k:
                continue
            colour[v] = c
            bit = 1 << c
            touched = [w for w in adj[v] if colour[w] < 0 and not forbidden[w] & bit]
            for w in touched:
                forbidden[w] |= bit
            search(done + 1, max(used, c + 1))
            for w in touched:
                forbidden[w] &= ~bit
            colour[v] = -1
            if best_k <= lb:
                return

    try:
        search(0, 0)
        optimal = True
    except _BudgetExhausted:
        optimal = False
    return ExactResult(best_k, Colouring.from_list(best), optimal, lb, nodes)


def resample_colour(
    cg: ConflictGraph, k: int, seed: int, max_rounds: int = 100_000
) -> Colouring | None:
    """Random colouring repaired by resampling, in the style of Moser and Tardos.

    Start from uniform colours in ``0..k-1``; while some conflicting pair
    shares a colour, redraw both colours of the lowest such pair.  Returns
    ``None`` once ``max_rounds`` redraws have not produced a valid colouring.
    Output depends only on ``(cg, k, seed, max_rounds)``.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    rng = np.random.default_rng(seed)
    colour = [int(c) for c in rng.integers(k, size=cg.n)]
    bad = {(e, f) for e, f in cg.pairs() if colour[e] == colour[f]}

    def recolour(v: int, c: int) -> None:
        for w in cg.adjacency[v]:
            pair = (v, w) if v < w else (w, v)
            if colour[w] == colour[v]:
                bad.discard(pair)
        colour[v] = c
        for w in cg.adjacency[v]:
            if colour[w] == c:
                bad.add((v, w) if v < w else (w, v))

    rounds = 0
    while bad:
        if rounds >= max_rounds:
            return None
        rounds += 1
        e, f = min(bad)
        new = rng.integers(k, size=2)
        recolour(e, int(new[0]))
        recolour(f, int(new[1]))
    return Colouring.from_list(colour)


# -- distance-t matchings ------------------------------------------------------


@dataclass(frozen=True)
class MatchingResult:
    """Edges pairwise at distance greater than t."""

    edges: frozenset[int]
    exact: bool

    @property
    def size(self) -> int:
        return len(self.edges)


def _clique_cover(cand: int, adj: list[int]) -> int:
    # greedy cover of cand by cliques; bounds any independent subset
    count = 0
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        inside = cand & adj[v]
        while inside:
            low = inside & -inside
            w = low.bit_length() - 1
            cand ^= low
            inside &= adj[w] & ~low
        count += 1
    return count


def max_independent_set(cg: ConflictGraph, budget: int = DEFAULT_BUDGET) -> tuple[list[int], bool]:
    """Maximum independent set by branch and bound with a clique-cover bound.

    Returns ``(members, optimal)``.
    """
    n = cg.n
    adj = _masks(cg)
    best = _greedy_independent(cg)
    best_mask = sum(1 << v for v in best)
    best_size = len(best)
    nodes = 0

    def search(cand: int, chosen: int, size: int) -> None:
        nonlocal nodes, best_mask, best_size
        nodes += 1
        if nodes > budget:
            raise _BudgetExhausted
        if not cand:
            if size > best_size:
                best_mask, best_size = chosen, size
            return
        if size + _clique_cover(cand, adj) <= best_size:
            return
        v = max(_bits(cand), key=lambda x: ((adj[x] & cand).bit_count(), -x))
        if not adj[v] & cand:
            # no conflicts left among candidates: take them all
            search(0, chosen | cand, size + cand.bit_count())
            return
        search(cand & ~adj[v] & ~(1 << v), chosen | (1 << v), size + 1)
        search(cand & ~(1 << v), chosen, size)

    try:
        search((1 << n) - 1, 0, 0)
        optimal = True
    except _BudgetExhausted:
        optimal = False
    return sorted(_bits(best_mask)), optimal


def _greedy_independent(cg: ConflictGraph) -> list[int]:
    """Maximal independent set, lowest remaining degree first, ties by id."""
    alive = set(range(cg.n))
    deg = {v: cg.degree(v) for v in alive}
    chosen = []
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        chosen.append(v)
        gone = {v} | (set(cg.adjacency[v]) & alive)
        alive -= gone
        for x in gone:
            for y in cg.adjacency[x]:
                if y in alive:
                    deg[y] -= 1
    return sorted(chosen)


def distance_matching(
    g: Graph, t: int, mode: str = "greedy", budget: int = DEFAULT_BUDGET, cg: ConflictGraph | None = None
) -> MatchingResult:
    """Edges pairwise at distance > t: greedy maximal, or maximum by exhaustive search.

    ``exact`` in the result is true only when the exhaustive search finished.
    """
    if cg is None:
        cg = conflict_graph(g, t)
    if mode == "greedy":
        return MatchingResult(frozenset(_greedy_independent(cg)), exact=False)
    if mode == "exact":
        members, optimal = max_independent_set(cg, budget)
        return MatchingResult(frozenset(members), exact=optimal)
    raise ValueError(f"mode must be 'greedy' or 'exact', got {mode!r}")


# -- bounds --------------------------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    m: int
    nu_t: int
    lower_bound: int | None
    trivial_upper: int
    theorem_upper: float
    achieved: int

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "nuT": self.nu_t,
            "lowerBound": self.lower_bound,
            "trivialUpper": self.trivial_upper,
            "theoremUpper": self.theorem_upper,
            "achieved": self.achieved,
        }


def bound_report(
    g: Graph, t: int, best: Colouring, nu: MatchingResult, epsilon: float = EPSILON
) -> BoundReport:
    """Collect the counting lower bound and the reference upper bounds for one colouring.

    ``lower_bound = ceil(m / nu_t)`` is only filled in when ``nu`` is exact; a
    greedy matching underestimates ``nu_t`` and would overstate it.
    """
    violations = verify_colouring(g, t, best)
    if violations:
        e, f, d, c = violations[0]
        raise ValueError(
            f"colouring is not a valid distance-{t} colouring: edges {e} and {f} "
            f"at distance {d} share colour {c} ({len(violations)} violations)"
        )
    for e in nu.edges:
        for f in edge_ball(g, e, t):
            if f != e and f in nu.edges:
                raise ValueError(f"matching edges {e} and {f} are within distance {t}")
    big = g.max_degree()
    achieved = best.colour_count
    lower = None
    if nu.exact:
        lower = 0 if g.m == 0 else math.ceil(g.m / nu.size)
        if lower > achieved:
            raise ValueError(f"lower bound {lower} exceeds achieved {achieved}")
    return BoundReport(
        m=g.m,
        nu_t=nu.size,
        lower_bound=lower,
        trivial_upper=1 + trivial_degree_bound(big, t),
        theorem_upper=(2 - epsilon) * big**t,
        achieved=achieved,
    )


# -- colouring file --------------------------------------------------------------


def format_colouring(c: Colouring) -> str:
    return "".join(f"{e} {c.assignment[e]}\n" for e in sorted(c.assignment))


def parse_colouring(text: str) -> Colouring:
    assignment = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected '<edge-id> <colour>', got {line!r}")
        try:
            e, col = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer field in {line!r}") from None
        if e < 0 or col < 0:
            raise ValueError(f"line {lineno}: negative value in {line!r}")
        if e in assignment:
            raise ValueError(f"line {lineno}: edge {e} coloured twice")
        assignment[e] = col
    return Colouring(assignment)


def read_colouring(path) -> Colouring:
    with open(path) as fh:
        return parse_colouring(fh.read())


def write_colouring(c: Colouring, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_colouring(c))
