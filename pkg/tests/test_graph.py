import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import corpus, named_graphs
from oracles import (
    INF,
    conflict_adjacency,
    line_graph_bfs_distances,
    shortest_cycle_exhaustive,
    vertex_distance_matrix,
)
from distedge import (
    build_graph,
    complete_bipartite,
    conflict_graph,
    cycle,
    edge_distance,
    girth,
    line_graph,
    path,
    petersen,
    vertex_distance,
    vertex_edge_distance,
)
from distedge.graph import (
    format_edge_list,
    line_graph_power,
    parse_edge_list,
    read_edge_list,
    trivial_degree_bound,
    write_edge_list,
)


@st.composite
def small_graphs(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return build_graph(n, chosen)


# -- build_graph ------------------------------------------------------------------


def test_triangle():
    g = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert g.m == 3
    assert g.edges == ((0, 1), (1, 2), (0, 2))
    assert all(g.degree(v) == 2 for v in range(3))


@pytest.mark.parametrize(
    "n, pairs, message",
    [
        (2, [(0, 0)], "loop"),
        (4, [(0, 1), (0, 1)], "parallel"),
        (4, [(0, 1), (1, 0)], "parallel"),
        (3, [(0, 3)], "outside"),
        (3, [(-1, 2)], "outside"),
    ],
)
def test_build_graph_rejects(n, pairs, message):
    with pytest.raises(ValueError, match=message):
        build_graph(n, pairs)


@given(small_graphs())
def test_adjacency_invariants(g):
    for u in range(g.n):
        assert g.degree(u) == len(g.incident_edges(u))
        for v, e in g.adjacency[u]:
            assert (u, e) in g.adjacency[v]
            assert set(g.edges[e]) == {u, v}
    assert sorted(e for u in range(g.n) for e in g.incident_edges(u)) == sorted(2 * list(range(g.m)))


def test_edge_set_helpers():
    g = petersen()
    assert g.edges_between({0}, {1, 4, 5}) == {g.edge_id(0, 1), g.edge_id(0, 4), g.edge_id(0, 5)}
    sub, keep = g.induced_subgraph(range(5))
    assert sub == cycle(5) and keep == [0, 1, 2, 3, 4]
    span = g.subgraph_edges([0, 1])
    assert span.n == 10 and span.m == 2


# -- distances --------------------------------------------------------------------


def test_vertex_distance_examples():
    c6 = cycle(6)
    assert vertex_distance(c6, 0, 3) == 3
    assert vertex_distance(c6, 4, 4) == 0
    two = build_graph(4, [(0, 1), (2, 3)])
    assert vertex_distance(two, 0, 3) is None


def test_edge_distance_examples():
    c6 = cycle(6)
    assert edge_distance(c6, 2, 2) == 0
    assert edge_distance(c6, 0, 1) == 1
    assert edge_distance(c6, c6.edge_id(0, 1), c6.edge_id(3, 4)) == 3
    two = build_graph(4, [(0, 1), (2, 3)])
    assert edge_distance(two, 0, 1) is None


def test_vertex_edge_distance_examples():
    p3 = path(3)
    assert vertex_edge_distance(p3, 1, 0) == 0
    assert vertex_edge_distance(p3, 0, p3.edge_id(1, 2)) == 1
    two = build_graph(4, [(0, 1), (2, 3)])
    assert vertex_edge_distance(two, 0, 1) is None


def test_invalid_ids():
    with pytest.raises(ValueError):
        vertex_distance(cycle(4), 0, 4)
    with pytest.raises(ValueError):
        edge_distance(cycle(4), 0, 9)


@pytest.mark.parametrize("name, g", corpus(max_vertices=12))
def test_edge_distance_matches_line_graph_bfs(name, g):
    ref = line_graph_bfs_distances(g.edges)
    for e in range(g.m):
        for f in range(g.m):
            d = edge_distance(g, e, f)
            assert (INF if d is None else d) == ref[e][f], (name, e, f)


@pytest.mark.parametrize("name, g", corpus(max_vertices=12))
def test_vertex_distances_match_floyd_warshall(name, g):
    ref = vertex_distance_matrix(g.n, g.edges)
    for u in range(g.n):
        for v in range(g.n):
            d = vertex_distance(g, u, v)
            assert (INF if d is None else d) == ref[u][v]
        for e, (a, b) in enumerate(g.edges):
            d = vertex_edge_distance(g, u, e)
            assert (INF if d is None else d) == min(ref[u][a], ref[u][b])


# -- girth ------------------------------------------------------------------------


def test_girth_examples():
    assert girth(cycle(5)) == 5
    assert girth(petersen()) == 5
    assert girth(named_graphs()["tree"]) is None
    assert girth(path(4)) is None
    assert girth(complete_bipartite(2, 2)) == 4


@pytest.mark.parametrize("name, g", corpus(max_vertices=10))
def test_girth_matches_cycle_enumeration(name, g):
    assert girth(g) == shortest_cycle_exhaustive(g.n, g.edges)


@settings(max_examples=150)
@given(small_graphs())
def test_girth_property(g):
    assert girth(g) == shortest_cycle_exhaustive(g.n, g.edges)


# -- line graph and conflict graph ------------------------------------------------


def test_line_graph_examples():
    assert line_graph(path(3)) == build_graph(2, [(0, 1)])
    k3 = line_graph(cycle(3))
    assert k3.m == 3 and all(k3.degree(v) == 2 for v in range(3))
    star = build_graph(5, [(0, i) for i in range(1, 5)])
    k4 = line_graph(star)
    assert k4.n == 4 and k4.m == 6


def test_conflict_graph_rejects_t0():
    with pytest.raises(ValueError):
        conflict_graph(cycle(5), 0)


def test_conflict_graph_t1_is_line_graph():
    for _, g in corpus(max_vertices=12):
        assert conflict_graph(g, 1).as_graph() == line_graph(g)


def test_conflict_graph_k33_complete():
    cg = conflict_graph(complete_bipartite(3, 3), 2)
    assert cg.n == 9 and cg.num_edges == 36 and cg.max_degree == 8


def test_conflict_graph_c6():
    g = cycle(6)
    cg = conflict_graph(g, 2)
    assert cg.n == 6 and all(cg.degree(e) == 4 for e in range(6))
    # the missing pairs are the three opposite pairs
    missing = {(e, f) for e in range(6) for f in range(e + 1, 6) if not cg.are_adjacent(e, f)}
    assert missing == {
        tuple(sorted((g.edge_id(0, 1), g.edge_id(3, 4)))),
        tuple(sorted((g.edge_id(1, 2), g.edge_id(4, 5)))),
        tuple(sorted((g.edge_id(2, 3), g.edge_id(0, 5)))),
    }


@pytest.mark.parametrize("t", [1, 2, 3, 4])
@pytest.mark.parametrize("name, g", corpus(max_vertices=12))
def test_conflict_graph_routes_agree(name, g, t):
    cg = conflict_graph(g, t)
    ref = conflict_adjacency(g.n, g.edges, t)
    assert [list(a) for a in cg.adjacency] == [sorted(a) for a in ref]
    assert line_graph_power(g, t).adjacency == cg.adjacency
    for e in range(cg.n):
        assert e not in cg.adjacency[e]
        for f in cg.adjacency[e]:
            assert e in cg.adjacency[f]
    assert cg.max_degree <= trivial_degree_bound(g.max_degree(), t)


# -- edge-list format ---------------------------------------------------------------


def test_edge_list_round_trip(tmp_path):
    for name, g in corpus():
        path_ = tmp_path / f"{name}.txt"
        write_edge_list(g, path_)
        back = read_edge_list(path_)
        assert back == g
        assert back.edges == g.edges


def test_edge_list_text():
    text = format_edge_list(path(3))
    assert text == "p edge 3 2\ne 1 2\ne 2 3\n"
    assert parse_edge_list("c comment\n" + text) == path(3)


@pytest.mark.parametrize(
    "text, message",
    [
        ("e 1 2\n", "line 1: edge before"),
        ("p edge 3 1\ne 1 4\n", "line 2: vertex out of range"),
        ("p edge 3 1\ne 1 x\n", "line 2: non-integer"),
        ("p edge 3 2\ne 1 2\n", "declares 2 edges"),
        ("p edge 3 1\nq 1 2\n", "line 2: unknown record"),
        ("p edge 3 2\ne 1 2\ne 2 1\n", "parallel"),
        ("", "missing"),
    ],
)
def test_edge_list_errors(text, message):
    with pytest.raises(ValueError, match=message):
        parse_edge_list(text)
