"""Simple undirected graphs, vertex/edge distances, girth and conflict graphs.

Edges carry dense integer ids ``0..m-1`` in insertion order.  The distance
between two edges counts the *vertices* on a shortest path joining them, so
adjacent edges are at distance 1 and the distance-t conflict graph is the
t-th power of the line graph.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

__all__ = [
    "Graph",
    "ConflictGraph",
    "build_graph",
    "vertex_distance",
    "edge_distance",
    "vertex_edge_distance",
    "bfs_distances",
    "edge_ball",
    "girth",
    "line_graph",
    "conflict_graph",
    "line_graph_power",
    "trivial_degree_bound",
    "read_edge_list",
    "write_edge_list",
    "parse_edge_list",
    "format_edge_list",
]


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adjacency[v]`` is a tuple of ``(neighbour, edge_id)`` pairs; edges are
    stored normalised as ``(min, max)``.
    """

    __slots__ = ("n", "edges", "adjacency", "_index")

    def __init__(self, n: int, edges: Sequence[tuple[int, int]]):
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        index: dict[tuple[int, int], int] = {}
        norm = []
        for eid, (u, v) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {eid} ({u}, {v}) references a vertex outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u} (edge {eid})")
            key = (u, v) if u < v else (v, u)
            if key in index:
                raise ValueError(f"parallel edge {key} (edges {index[key]} and {eid})")
            index[key] = eid
            norm.append(key)
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(norm)
        self.adjacency: tuple[tuple[tuple[int, int], ...], ...] = tuple(tuple(a) for a in adj)
        self._index = index

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def neighbours(self, v: int) -> list[int]:
        return [w for w, _ in self.adjacency[v]]

    def incident_edges(self, v: int) -> list[int]:
        """Edge ids of ``G(v)``."""
        return [e for _, e in self.adjacency[v]]

    def edge_id(self, u: int, v: int) -> int:
        return self._index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._index

    def is_regular(self) -> bool:
        return len({len(a) for a in self.adjacency}) <= 1

    def subgraph_edges(self, edge_ids: Iterable[int]) -> Graph:
        """Spanning subgraph ``(V, X)`` keeping every vertex; edge ids are renumbered."""
        return Graph(self.n, [self.edges[e] for e in sorted(set(edge_ids))])

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """``G[A]`` relabelled to ``0..|A|-1``; also returns the new->old vertex map."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        pairs = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph(len(keep), pairs), keep

    def edges_between(self, a: Iterable[int], b: Iterable[int]) -> set[int]:
        """Edge ids with one endpoint in ``a`` and the other in ``b``."""
        a, b = set(a), set(b)
        return {
            e
            for e, (u, v) in enumerate(self.edges)
            if (u in a and v in b) or (u in b and v in a)
        }

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Validate and build a simple graph; loops, parallel edges and bad ids raise ``ValueError``."""
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    return Graph(n, [tuple(p) for p in pairs])


def bfs_distances(g: Graph, sources: Iterable[int], limit: int | None = None) -> dict[int, int]:
    """Multi-source BFS; maps each reached vertex to its distance (at most ``limit``)."""
    dist = {}
    queue = deque()
    for s in sources:
        if s not in dist:
            dist[s] = 0
            queue.append(s)
    while queue:
        x = queue.popleft()
        d = dist[x]
        if limit is not None and d >= limit:
            continue
        for y, _ in g.adjacency[x]:
            if y not in dist:
                dist[y] = d + 1
                queue.append(y)
    return dist


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range 0..{g.n - 1}")


def _check_edge(g: Graph, e: int) -> None:
    if not 0 <= e < g.m:
        raise ValueError(f"edge id {e} out of range 0..{g.m - 1}")


def vertex_distance(g: Graph, u: int, v: int) -> int | None:
    """Number of edges on a shortest u-v path, or ``None`` if unreachable."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    return bfs_distances(g, [u]).get(v)


def vertex_edge_distance(g: Graph, v: int, e: int) -> int | None:
    """Smaller of the distances from ``v`` to the two endpoints of ``e``."""
    _check_vertex(g, v)
    _check_edge(g, e)
    dist = bfs_distances(g, [v])
    ds = [dist[w] for w in g.edges[e] if w in dist]
    return min(ds) if ds else None


def edge_distance(g: Graph, e: int, f: int) -> int | None:
    """Vertices on a shortest path joining ``e`` and ``f``: 0 if equal, 1 if adjacent.

    Returns ``None`` when the edges lie in different components.
    """
    _check_edge(g, e)
    _check_edge(g, f)
    if e == f:
        return 0
    dist = bfs_distances(g, g.edges[e])
    ds = [dist[w] for w in g.edges[f] if w in dist]
    return 1 + min(ds) if ds else None


def edge_ball(g: Graph, e: int, radius: int) -> dict[int, int]:
    """Edges at edge-distance at most ``radius`` from ``e``, mapped to that distance.

    Includes ``e`` itself at distance 0.  Runs a BFS of depth ``radius - 1``
    from the endpoints of ``e`` in the base graph.
    """
    out = {e: 0}
    if radius < 1:
        return out
    dist = bfs_distances(g, g.edges[e], limit=radius - 1)
    for x, dx in dist.items():
        for _, f in g.adjacency[x]:
            d = dx + 1
            if f != e and out.get(f, radius + 1) > d:
                out[f] = d
    return out


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or ``None`` for a forest.

    BFS from each root in turn, then drop the root: every cycle is found from
    its first-processed vertex, where BFS sees it at its exact length.
    """
    best = None
    removed = [False] * g.n
    for root in range(g.n):
        dist = {root: 0}
        parent_edge = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            dx = dist[x]
            if best is not None and 2 * dx >= best:
                break
            for y, eid in g.adjacency[x]:
                if removed[y] or eid == parent_edge[x]:
                    continue
                if y in dist:
                    c = dx + dist[y] + 1
                    if best is None or c < best:
                        best = c
                else:
                    dist[y] = dx + 1
                    parent_edge[y] = eid
                    queue.append(y)
        removed[root] = True
        if best == 3:
            break
    return best


def line_graph(g: Graph) -> Graph:
    """Vertices are the edge ids of ``g``; adjacent iff the edges share an endpoint."""
    pairs = []
    for v in range(g.n):
        inc = g.incident_edges(v)
        for i in range(len(inc)):
            for j in range(i + 1, len(inc)):
                pairs.append((inc[i], inc[j]))
    return Graph(g.m, sorted(set((min(p), max(p)) for p in pairs)))


def trivial_degree_bound(max_deg: int, t: int) -> int:
    """``2 * sum_{j=1..t} (max_deg - 1)^j``, the conflict-graph degree ceiling."""
    base = max(max_deg - 1, 0)
    return 2 * sum(base**j for j in range(1, t + 1))


class ConflictGraph:
    """The graph ``(L(G))^t`` over the edge ids of a base graph.

    ``adjacency[e]`` is a sorted tuple of conflicting edge ids.
    """

    __slots__ = ("base", "t", "adjacency", "max_degree", "_sets")

    def __init__(self, base: Graph | None, t: int | None, adjacency: Sequence[Sequence[int]]):
        self.base = base
        self.t = t
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adjacency)
        self.max_degree = max((len(a) for a in self.adjacency), default=0)
        self._sets: tuple[frozenset[int], ...] | None = None

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    @property
    def adjacency_sets(self) -> tuple[frozenset[int], ...]:
        if self._sets is None:
            self._sets = tuple(frozenset(a) for a in self.adjacency)
        return self._sets

    def degree(self, e: int) -> int:
        return len(self.adjacency[e])

    def are_adjacent(self, e: int, f: int) -> bool:
        return f in self.adjacency_sets[e]

    def pairs(self):
        """Each conflict ``(e, f)`` with ``e < f`` once."""
        for e, nbrs in enumerate(self.adjacency):
            for f in nbrs:
                if e < f:
                    yield e, f

    def as_graph(self) -> Graph:
        return Graph(self.n, list(self.pairs()))

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Sequence[int]]) -> ConflictGraph:
        """Wrap a bare adjacency list with no base graph, e.g. to colour an arbitrary graph."""
        return cls(None, None, adjacency)

    def __repr__(self) -> str:
        return f"ConflictGraph(t={self.t}, n={self.n}, edges={self.num_edges}, max_degree={self.max_degree})"


def conflict_graph(g: Graph, t: int) -> ConflictGraph:
    """Build ``(L(G))^t`` by a depth-(t-1) vertex BFS around every edge."""
    if t < 1:
        raise ValueError(f"t must be a positive integer, got {t}")
    adjacency = []
    for e in range(g.m):
        ball = edge_ball(g, e, t)
        del ball[e]
        adjacency.append(ball)
    return ConflictGraph(g, t, adjacency)


def line_graph_power(g: Graph, t: int) -> ConflictGraph:
    """Same as :func:`conflict_graph` but via explicit BFS in the line graph.

    Slower; kept as an independent route for cross-checking.
    """
    if t < 1:
        raise ValueError(f"t must be a positive integer, got {t}")
    lg = line_graph(g)
    adjacency = []
    for e in range(g.m):
        dist = bfs_distances(lg, [e], limit=t)
        adjacency.append([f for f in dist if f != e])
    return ConflictGraph(g, t, adjacency)


# -- edge-list text format ---------------------------------------------------


def format_edge_list(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``p edge <n> <m>`` followed by ``e <u> <v>`` lines (1-based).

    Lines starting with ``c`` are comments.  Errors name the offending line.
    """
    n = m = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ValueError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[1] not in ("edge", "edges", "col"):
                raise ValueError(f"line {lineno}: expected 'p edge <n> <m>', got {line!r}")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ValueError(f"line {lineno}: non-integer header field in {line!r}") from None
        elif parts[0] == "e":
            if n is None:
                raise ValueError(f"line {lineno}: edge before 'p' header")
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: expected 'e <u> <v>', got {line!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ValueError(f"line {lineno}: non-integer vertex in {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"line {lineno}: vertex out of range 1..{n} in {line!r}")
            pairs.append((u - 1, v - 1))
        else:
            raise ValueError(f"line {lineno}: unknown record type {parts[0]!r}")
    if n is None:
        raise ValueError("missing 'p edge <n> <m>' header")
    if len(pairs) != m:
        raise ValueError(f"header declares {m} edges but {len(pairs)} were read")
    return build_graph(n, pairs)


def read_edge_list(path) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_edge_list(g))
