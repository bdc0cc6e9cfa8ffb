import math
import random
from itertools import combinations

import networkx as nx
import pytest

from bruteforce import floyd_warshall
from convexgeom.errors import Graph6ParseError, GraphInputError
from convexgeom.fixtures import SEVEN_FIXTURE, delete_vertex
from convexgeom.graphs import (
    Graph,
    bit,
    component_of,
    components,
    diameter,
    distances,
    distances_from,
    emit_edge_list,
    emit_graph6,
    induced_subgraph,
    is_connected,
    iter_bits,
    mask_of,
    parse_edge_list,
    parse_graph6,
    vertices_of,
)


def labeled_graphs(n):
    """Every labeled graph on n vertices, one per edge subset."""
    pairs = list(combinations(range(n), 2))
    for word in range(1 << len(pairs)):
        yield Graph.from_edge_list(
            n, [pairs[i] for i in range(len(pairs)) if word & bit(i)])


def random_graph(n, p, rng):
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edge_list(n, edges)


def test_mask_helpers():
    assert bit(0) == 1 and bit(5) == 32
    assert list(iter_bits(0b101001)) == [0, 3, 5]
    assert vertices_of(0b1100) == (2, 3)
    assert mask_of([4, 1, 1]) == 0b10010
    assert mask_of([]) == 0


def test_graph_validation():
    with pytest.raises(GraphInputError):
        Graph(2, (0b10,))               # adjacency length mismatch
    with pytest.raises(GraphInputError):
        Graph(2, (0b01, 0b10))          # self-loops
    with pytest.raises(GraphInputError):
        Graph(2, (0b10, 0b00))          # asymmetric
    with pytest.raises(GraphInputError):
        Graph(1, (0b10,))               # out-of-range neighbor
    with pytest.raises(GraphInputError):
        Graph(33, (0,) * 33)
    with pytest.raises(GraphInputError):
        Graph.from_edge_list(3, [(0, 0)])
    with pytest.raises(GraphInputError):
        Graph.from_edge_list(3, [(0, 3)])


def test_graph_is_immutable_and_hashable():
    g = Graph.from_edge_list(3, [(0, 1), (1, 2)])
    with pytest.raises(AttributeError):
        g.n = 5
    h = Graph.from_edge_list(3, [(1, 2), (0, 1)])
    assert g == h and hash(g) == hash(h)
    assert len({g, h}) == 1


def test_basic_accessors():
    g = Graph.from_edge_list(4, [(0, 1), (1, 2), (2, 3), (1, 3)])
    assert g.vertex_set() == 0b1111
    assert g.has_edge(1, 3) and not g.has_edge(0, 2)
    assert g.degree(1) == 3 and g.degree(0) == 1
    assert g.edge_count() == 4
    assert sorted(g.edges()) == [(0, 1), (1, 2), (1, 3), (2, 3)]


def test_with_new_vertex_and_relabel():
    path = Graph.from_edge_list(3, [(0, 1), (1, 2)])
    cycle = path.with_new_vertex(bit(0) | bit(2))
    assert cycle.n == 4 and sorted(cycle.edges()) == [(0, 1), (0, 3), (1, 2), (2, 3)]
    perm = (3, 1, 0, 2)
    back = cycle.relabel(perm)
    for u in range(4):
        for v in range(4):
            if u != v:
                assert back.has_edge(perm[u], perm[v]) == cycle.has_edge(u, v)
    inv = [0] * 4
    for i, p in enumerate(perm):
        inv[p] = i
    assert back.relabel(inv) == cycle


def test_induced_subgraph_mapping():
    g = Graph.from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)])
    sub, mapping = induced_subgraph(g, mask_of([1, 2, 3]))
    assert mapping == (1, 2, 3)
    assert sorted(sub.edges()) == [(0, 1), (0, 2), (1, 2)]
    empty, empty_map = induced_subgraph(g, 0)
    assert empty.n == 0 and empty_map == ()


def test_distances_against_floyd_warshall():
    rng = random.Random(7)
    for trial in range(60):
        n = rng.randrange(1, 9)
        g = random_graph(n, rng.random(), rng)
        assert distances(g) == floyd_warshall(g)


def test_distance_triangle_inequality():
    rng = random.Random(11)
    for trial in range(20):
        g = random_graph(8, 0.4, rng)
        d = distances(g)
        for u in range(8):
            for v in range(8):
                for w in range(8):
                    assert d[u][v] <= d[u][w] + d[w][v]


def test_distances_disconnected():
    g = Graph.from_edge_list(4, [(0, 1), (2, 3)])
    assert distances_from(g, 0) == [0, 1, math.inf, math.inf]
    assert diameter(g) is math.inf
    assert diameter(Graph(0, ())) is math.inf
    assert diameter(Graph(1, (0,))) == 0


def test_seven_vertex_fixture_distances():
    g = SEVEN_FIXTURE
    assert diameter(g) == 3
    shrunk = delete_vertex(g, 1)
    # removing the cut-ish hub vertex stretches the 1..7 distance to 4
    assert distances_from(shrunk, 0)[shrunk.n - 1] == 4
    assert diameter(shrunk) == 4


def test_components():
    g = Graph.from_edge_list(6, [(0, 1), (1, 2), (4, 5)])
    assert components(g) == [0b000111, 0b001000, 0b110000]
    assert component_of(g, 5) == 0b110000
    assert component_of(g, 1, allowed=mask_of([1, 2])) == 0b110
    assert not is_connected(g)
    assert is_connected(Graph.from_edge_list(2, [(0, 1)]))
    assert not is_connected(Graph(0, ()))


def test_graph6_round_trip_exhaustive_small():
    for n in range(7):
        seen = set()
        for g in labeled_graphs(n):
            s = emit_graph6(g)
            assert parse_graph6(s) == g
            seen.add(s)
        # distinct labeled graphs have distinct encodings
        assert len(seen) == 1 << (n * (n - 1) // 2)


def test_graph6_against_networkx():
    rng = random.Random(23)
    for trial in range(200):
        n = rng.randrange(0, 13)
        g = random_graph(n, rng.random(), rng)
        ours = emit_graph6(g)
        nxg = nx.from_graph6_bytes(ours.encode())
        assert set(nxg.edges()) == {tuple(e) for e in g.edges()}
        theirs = nx.to_graph6_bytes(nxg, header=False).decode().strip()
        assert theirs == ours


def test_graph6_known_strings():
    assert emit_graph6(Graph(0, ())) == "?"
    assert emit_graph6(Graph(1, (0,))) == "@"
    assert emit_graph6(Graph.from_edge_list(2, [(0, 1)])) == "A_"
    assert emit_graph6(Graph.from_edge_list(3, [(0, 1), (0, 2), (1, 2)])) == "Bw"
    assert parse_graph6("Bw").edge_count() == 3


def test_graph6_header_and_whitespace():
    g = parse_graph6(">>graph6<<A_\n")
    assert g.n == 2 and g.has_edge(0, 1)


def test_graph6_parse_errors():
    with pytest.raises(Graph6ParseError):
        parse_graph6("")
    with pytest.raises(Graph6ParseError) as err:
        parse_graph6("A" + chr(40))
    assert err.value.offset == 1
    with pytest.raises(Graph6ParseError):
        parse_graph6("~??")            # long form rejected
    with pytest.raises(Graph6ParseError):
        parse_graph6("A")              # truncated bit vector
    with pytest.raises(Graph6ParseError):
        parse_graph6("A__")            # trailing bytes
    with pytest.raises(Graph6ParseError):
        parse_graph6("Aa")             # nonzero padding (only bit 0 may be set)
    with pytest.raises(Graph6ParseError):
        parse_graph6(chr(63 + 33))     # n = 33 beyond vertex capacity


def test_vertex_capacity():
    with pytest.raises(GraphInputError):
        Graph(40, (0,) * 40)


def test_edge_list_plain_indices():
    g, labels = parse_edge_list("4 3\n0 1\n1 2\n2 3\n")
    assert sorted(g.edges()) == [(0, 1), (1, 2), (2, 3)]
    assert labels == ["0", "1", "2", "3"]


def test_edge_list_named_vertices():
    text = "# a comment\n3 2\na b\n\nb c\n"
    g, labels = parse_edge_list(text)
    assert labels == ["a", "b", "c"]
    assert sorted(g.edges()) == [(0, 1), (1, 2)]


def test_edge_list_unnamed_isolated_vertices():
    g, labels = parse_edge_list("4 1\nx y\n")
    assert g.n == 4 and labels[:2] == ["x", "y"]
    assert len(set(labels)) == 4


def test_edge_list_out_of_range_token_becomes_label():
    # "5" is not a valid index for n=2, so tokens are treated as names
    g, labels = parse_edge_list("2 1\n0 5\n")
    assert labels == ["0", "5"] and g.has_edge(0, 1)


def test_edge_list_errors():
    for bad in ["", "x\n", "2 1\n", "2 1\n0 1\n0 1\nextra", "1 1\n0 0\n",
                "2 1\n0 1 2\n", "-1 0\n", "2 2\na b\nc d\n"]:
        with pytest.raises(GraphInputError):
            parse_edge_list(bad)


def test_edge_list_round_trip():
    g = SEVEN_FIXTURE
    text = emit_edge_list(g, [str(i + 1) for i in range(7)])
    back, labels = parse_edge_list(text)
    assert back == g and labels == [str(i + 1) for i in range(7)]
    assert emit_edge_list(back, labels) == text
