"""Brute-force reference computations used only by the tests.

None of these share code with the package: distances come from
Floyd-Warshall, walks from explicit enumeration, chromatic numbers from a
subset DP and independent sets from exhaustive search.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque

INF = float("inf")


def vertex_distance_matrix(n, edges):
    d = [[INF] * n for _ in range(n)]
    for v in range(n):
        d[v][v] = 0
    for u, v in edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == INF:
                continue
            di = d[i]
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return d


def edge_distance_matrix(n, edges):
    """Pairwise edge distances: 1 + min endpoint distance, 0 on the diagonal."""
    d = vertex_distance_matrix(n, edges)
    m = len(edges)
    out = [[INF] * m for _ in range(m)]
    for i, (a, b) in enumerate(edges):
        for j, (c, e) in enumerate(edges):
            out[i][j] = 0 if i == j else 1 + min(d[a][c], d[a][e], d[b][c], d[b][e])
    return out


def line_graph_bfs_distances(edges):
    """Edge distances as BFS distances in an explicitly built line graph."""
    m = len(edges)
    adj = [[j for j in range(m) if j != i and set(edges[i]) & set(edges[j])] for i in range(m)]
    out = []
    for s in range(m):
        dist = {s: 0}
        q = deque([s])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    q.append(y)
        out.append([dist.get(j, INF) for j in range(m)])
    return out


def conflict_adjacency(n, edges, t):
    d = edge_distance_matrix(n, edges)
    m = len(edges)
    return [[j for j in range(m) if j != i and d[i][j] <= t] for i in range(m)]


def enumerate_walks(n, edges, lmax):
    """Every directed walk ``(v0, e1, ..., el, vl)`` with 1 <= l <= lmax.

    Yields ``(first_edge, last_edge, length, start, end)``.
    """
    inc = [[] for _ in range(n)]
    for i, (a, b) in enumerate(edges):
        inc[a].append((i, b))
        inc[b].append((i, a))

    def extend(first, start, vertex, last, length):
        yield first, last, length, start, vertex
        if length < lmax:
            for e, w in inc[vertex]:
                yield from extend(first, start, w, e, length + 1)

    for v in range(n):
        for e, w in inc[v]:
            yield from extend(e, v, w, e, 1)


def walk_table(n, edges, lmax):
    """Counter keyed by (first, last, length, start, end)."""
    return Counter(enumerate_walks(n, edges, lmax))


def shortest_cycle_exhaustive(n, edges):
    """Girth by enumerating simple cycles from each smallest vertex; None if acyclic."""
    adj = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    best = None

    def dfs(start, v, visited, length):
        nonlocal best
        for w in adj[v]:
            if w == start and len(visited) >= 3:
                c = length + 1
                if best is None or c < best:
                    best = c
            elif w > start and w not in visited:
                visited.add(w)
                dfs(start, w, visited, length + 1)
                visited.remove(w)

    for s in range(n):
        dfs(s, s, {s}, 0)
    return best


def chromatic_number(adj):
    """Subset DP over independent sets; fine up to ~14 vertices."""
    n = len(adj)
    if n == 0:
        return 0
    masks = [sum(1 << w for w in a) for a in adj]
    full = (1 << n) - 1
    independent = [True] * (1 << n)
    for s in range(1, 1 << n):
        low = (s & -s).bit_length() - 1
        rest = s & ~(1 << low)
        independent[s] = independent[rest] and not (masks[low] & rest)
    best = [0] + [n + 1] * full
    for s in range(1, full + 1):
        low = s & -s
        rest = s ^ low
        sub = rest
        while True:
            part = sub | low
            if independent[part]:
                c = best[s ^ part] + 1
                if c < best[s]:
                    best[s] = c
            if sub == 0:
                break
            sub = (sub - 1) & rest
    return best[full]


def max_independent_set_size(adj):
    n = len(adj)
    nbr = [set(a) for a in adj]
    size = 0
    for k in range(1, n + 1):
        found = any(
            all(b not in nbr[a] for a, b in itertools.combinations(combo, 2))
            for combo in itertools.combinations(range(n), k)
        )
        if not found:
            break
        size = k
    return size


def is_proper(adj, colours):
    return all(colours[v] != colours[w] for v in range(len(adj)) for w in adj[v])
