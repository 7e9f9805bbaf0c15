import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicliquebounds.families import complete, crown_cycle, cycle, path, powerset_family
from bicliquebounds.graph import (
    Graph,
    GraphError,
    brute_force_has_induced,
    delete_vertex,
    from_edges,
    is_bipartite,
    is_connected,
    is_diamond_free,
    is_induced_c4_free,
    is_triangle_free,
    parse_edge_list,
    parse_graph6,
    to_edge_list,
    to_graph6,
)

from conftest import C4, DIAMOND, K3, P4, connected_graphs, random_graph


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edges(n, chosen)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_from_edges_basic():
    k2 = from_edges(2, [(0, 1)])
    assert k2.n == 2 and k2.edges() == [(0, 1)]
    assert K3.m == 3
    assert P4.edges() == [(0, 1), (1, 2), (2, 3)]
    assert from_edges(2, [(0, 1), (1, 0), (0, 1)]).m == 1


@pytest.mark.parametrize("edges", [[(0, 2)], [(1, 1)], [(-1, 0)]])
def test_from_edges_rejects(edges):
    with pytest.raises(GraphError):
        from_edges(2, edges)


def test_graph_is_immutable():
    with pytest.raises(AttributeError):
        K3.n = 4


def test_constructor_validates_symmetry():
    with pytest.raises(GraphError):
        Graph(2, [0b10, 0])


@given(graphs())
def test_adjacency_symmetric_and_handshake(g):
    for u in range(g.n):
        for v in g.neighbors(u):
            assert u in g.neighbors(v)
    assert sum(g.degrees()) == 2 * g.m


def test_is_connected():
    assert is_connected(P4)
    assert not is_connected(from_edges(4, [(0, 1), (2, 3)]))
    assert is_connected(crown_cycle(5))


@given(graphs())
def test_is_connected_matches_bfs_oracle(g):
    assert is_connected(g) == nx.is_connected(to_nx(g))


def test_class_predicates_examples():
    c5 = cycle(5)
    assert is_triangle_free(c5) and not is_triangle_free(K3)
    assert not is_triangle_free(powerset_family(3))
    assert not is_induced_c4_free(C4)
    assert is_induced_c4_free(complete(4))
    assert is_induced_c4_free(crown_cycle(5))
    assert not is_diamond_free(DIAMOND)
    assert is_diamond_free(cycle(6))
    assert is_diamond_free(crown_cycle(5))
    assert is_bipartite(C4) and not is_bipartite(c5) and is_bipartite(path(7))


def _is_c4(h):
    return h.m == 4 and all(d == 2 for d in h.degrees())


def _is_k3(h):
    return h.m == 3


def _is_diamond(h):
    return h.m == 5


@pytest.mark.parametrize("n", range(3, 8))
def test_predicates_match_subset_scan_on_census(n):
    for g in connected_graphs(n):
        assert is_induced_c4_free(g) == (not brute_force_has_induced(g, 4, _is_c4))
        assert is_triangle_free(g) == (not brute_force_has_induced(g, 3, _is_k3))
        assert is_diamond_free(g) == (not brute_force_has_induced(g, 4, _is_diamond))


def test_predicates_match_subset_scan_random_n8(rng):
    for _ in range(150):
        g = random_graph(rng, 8, rng.uniform(0.2, 0.8))
        assert is_induced_c4_free(g) == (not brute_force_has_induced(g, 4, _is_c4))
        assert is_triangle_free(g) == (not brute_force_has_induced(g, 3, _is_k3))


def test_delete_vertex():
    h, mp = delete_vertex(K3, 0)
    assert h == from_edges(2, [(0, 1)]) and mp == {1: 0, 2: 1}
    h, _ = delete_vertex(P4, 1)
    assert h == from_edges(3, [(1, 2)])
    for v in range(5):
        h, _ = delete_vertex(cycle(5), v)
        assert nx.is_isomorphic(to_nx(h), to_nx(path(4)))
    with pytest.raises(GraphError):
        delete_vertex(K3, 3)


def test_graph6_examples():
    assert parse_graph6("A_") == from_edges(2, [(0, 1)])
    assert parse_graph6("Bw") == K3
    assert to_graph6(K3) == "Bw"
    assert parse_graph6(to_graph6(P4)) == P4
    assert parse_graph6(">>graph6<<Bw") == K3


@given(graphs(max_n=20))
@settings(max_examples=200)
def test_graph6_matches_networkx_encoder(g):
    ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert to_graph6(g) == ref
    assert parse_graph6(ref) == g


@pytest.mark.parametrize("bad", ["", "~??", "Bx?", "B", "A`", "Bw?"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(GraphError):
        parse_graph6(bad)


def test_graph6_refuses_large():
    with pytest.raises(GraphError):
        to_graph6(powerset_family(6))


def test_edge_list_examples():
    assert parse_edge_list("2 1\n0 1") == from_edges(2, [(0, 1)])
    assert parse_edge_list("3 3\n0 1\n1 2\n0 2") == K3
    g = crown_cycle(5)
    assert parse_edge_list(to_edge_list(g)) == g
    big = powerset_family(7)
    assert parse_edge_list(to_edge_list(big)) == big


@pytest.mark.parametrize("bad", ["", "2 2\n0 1", "2 1\n0 x", "2\n", "2 1\n0 1 2", "2 1\n0 5"])
def test_edge_list_rejects(bad):
    with pytest.raises(GraphError):
        parse_edge_list(bad)
