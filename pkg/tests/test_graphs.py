import pytest
from hypothesis import given, settings, strategies as st

from geodetic import (
    GraphFormatError,
    PathSeq,
    SaturationError,
    UnreachablePairError,
    build_graph,
    count_geodesics,
    enumerate_geodesics,
    format_graph,
    graph_to_dot,
    is_complete_bipartite,
    is_k_geodetic,
    min_geodetic_k,
    parse_graph,
)
from geodetic.zoo import (
    complete_bipartite,
    cycle_graph,
    path_graph,
    petersen_graph,
    random_tree,
    star_graph,
)
import random

from oracles import dfs_shortest_paths


@st.composite
def connected_graphs(draw, max_n=8):
    """A random tree plus random extra edges: always connected."""
    n = draw(st.integers(2, max_n))
    edges = {(draw(st.integers(0, i - 1)), i) for i in range(1, n)}
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
    for u, v in draw(st.sets(pair, max_size=12)):
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return build_graph(sorted(edges), n)


@settings(max_examples=60, deadline=None)
@given(connected_graphs())
def test_count_and_enumerate_match_dfs_oracle(g):
    for u in range(g.vertex_count):
        for v in range(u + 1, g.vertex_count):
            dist, walks = dfs_shortest_paths(g, u, v)
            assert g.dist(u, v) == dist
            assert count_geodesics(g, u, v) == len(walks)
            paths, truncated = enumerate_geodesics(g, u, v)
            assert not truncated
            assert {p.vertices for p in paths} == set(walks)


def test_enumerate_respects_limit():
    g = complete_bipartite(3, 3)
    paths, truncated = enumerate_geodesics(g, 0, 1, limit=2)
    assert truncated and len(paths) == 2
    paths, truncated = enumerate_geodesics(g, 0, 1, limit=3)
    assert not truncated and len(paths) == 3


def test_count_saturates_at_cap():
    g = cycle_graph(4)
    assert count_geodesics(g, 0, 2) == 2
    assert count_geodesics(g, 0, 2, count_cap=1) == 1


@given(st.integers(2, 50), st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_trees_are_1_geodetic(n, seed):
    g = random_tree(n, random.Random(seed))
    k, _ = min_geodetic_k(g)
    assert k == 1


def test_known_min_k_values():
    assert min_geodetic_k(path_graph(6))[0] == 1
    assert min_geodetic_k(star_graph(5))[0] == 1
    assert min_geodetic_k(petersen_graph())[0] == 1
    for n in (3, 5, 7, 9):
        assert min_geodetic_k(cycle_graph(n))[0] == 1
    for n in (4, 6, 8):
        k, (u, v) = min_geodetic_k(cycle_graph(n))
        assert k == 2
        assert cycle_graph(n).dist(u, v) == n // 2
    for a in range(1, 5):
        for b in range(a, 5):
            # K_{1,l} is a star, hence a tree; otherwise same-part pairs
            # route through every vertex of the other part.
            expected = max(a, b) if a >= 2 else 1
            assert min_geodetic_k(complete_bipartite(a, b))[0] == expected


def test_min_k_single_vertex():
    g = build_graph([], 1)
    assert min_geodetic_k(g) == (1, (0, 0))


def test_is_k_geodetic():
    g = cycle_graph(4)
    ok, witness = is_k_geodetic(g, 2)
    assert ok and witness is None
    ok, witness = is_k_geodetic(g, 1)
    assert not ok
    u, v = witness
    assert g.dist(u, v) == 2
    with pytest.raises(ValueError):
        is_k_geodetic(g, 0)


def test_min_k_saturation_cap():
    with pytest.raises(SaturationError):
        min_geodetic_k(cycle_graph(4), count_cap=2)
    assert min_geodetic_k(cycle_graph(4), count_cap=3)[0] == 2


def test_disconnected_rejected():
    g = build_graph([(0, 1)], 4)
    with pytest.raises(UnreachablePairError):
        min_geodetic_k(g)
    with pytest.raises(UnreachablePairError):
        g.dist(0, 3)


def test_is_complete_bipartite():
    assert is_complete_bipartite(complete_bipartite(3, 3)) == (3, 3)
    assert is_complete_bipartite(complete_bipartite(2, 4)) == (2, 4)
    assert is_complete_bipartite(star_graph(5)) == (1, 5)
    assert is_complete_bipartite(path_graph(2)) == (1, 1)
    assert is_complete_bipartite(path_graph(4)) is None
    assert is_complete_bipartite(cycle_graph(5)) is None
    assert is_complete_bipartite(cycle_graph(4)) == (2, 2)
    assert is_complete_bipartite(petersen_graph()) is None


def test_build_graph_validation():
    with pytest.raises(GraphFormatError):
        build_graph([(0, 0)], 2)
    with pytest.raises(GraphFormatError):
        build_graph([(0, 5)], 3)
    # duplicate mentions of one edge collapse
    assert build_graph([(0, 1), (1, 0)], 2).edge_count == 1


def test_parse_format_roundtrip():
    g = petersen_graph()
    again = parse_graph(format_graph(g))
    assert again.vertex_count == 10
    assert list(again.edges()) == list(g.edges())


def test_parse_graph_errors():
    with pytest.raises(GraphFormatError):
        parse_graph("e 0 1\n")
    with pytest.raises(GraphFormatError):
        parse_graph("graph 2\ne 0 2\n")
    with pytest.raises(GraphFormatError):
        parse_graph("graph x\n")


def test_parse_graph_comments_and_blanks():
    g = parse_graph("# a square\ngraph 4\n\ne 0 1\ne 1 2\ne 2 3 # wrap\ne 0 3\n")
    assert g.edge_count == 4


def test_dot_export():
    text = graph_to_dot(cycle_graph(3))
    assert text.startswith("graph G {")
    assert "0 -- 1" in text
    assert text.endswith("}\n")
    assert graph_to_dot(build_graph([], 0)).startswith("graph G {")


def test_pathseq_behavior():
    p = PathSeq((0, 1, 2))
    assert p.length == 2 and p.start == 0 and p.end == 2
    assert p.reversed().vertices == (2, 1, 0)
    assert p[1] == 1
    with pytest.raises(ValueError):
        PathSeq(())
