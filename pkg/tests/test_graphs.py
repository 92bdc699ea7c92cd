import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pebbling.errors import FormatError, UsageError
from pebbling.graphs import (
    Graph,
    complete,
    cycle,
    encode_graph6,
    enumerate_connected_graphs,
    format_edge_list,
    parse_edge_list,
    parse_graph6,
    path,
    star,
)

from oracles import connected_class_count, is_isomorphic


def test_constructions():
    assert complete(2).edges() == ((0, 1),)
    assert path(3).edges() == ((0, 1), (1, 2))
    assert cycle(3).edges() == complete(3).edges()
    assert star(4).edges() == ((0, 1), (0, 2), (0, 3))
    assert path(1).edges() == ()


@pytest.mark.parametrize(
    "build, bad_n",
    [(complete, 0), (path, 0), (cycle, 2), (star, 1)],
)
def test_construction_minimums(build, bad_n):
    with pytest.raises(UsageError):
        build(bad_n)


def test_graph_rejects_bad_edges():
    with pytest.raises(UsageError):
        Graph(2, [(0, 0)])
    with pytest.raises(UsageError):
        Graph(2, [(0, 2)])
    with pytest.raises(UsageError):
        Graph(0)


def test_neighbors():
    assert complete(2).neighbors(0) == frozenset({1})
    assert path(3).neighbors(1) == frozenset({0, 2})
    assert complete(1).neighbors(0) == frozenset()
    with pytest.raises(UsageError):
        complete(2).neighbors(2)


def test_min_degree():
    assert complete(1).min_degree() == 0
    assert path(3).min_degree() == 1
    assert cycle(5).min_degree() == 2


def test_is_connected():
    assert complete(2).is_connected()
    assert not Graph(2).is_connected()
    assert complete(1).is_connected()
    assert not Graph(3, [(0, 1)]).is_connected()


def test_distances():
    assert path(3).distances_from(0) == (0, 1, 2)
    assert Graph(3, [(0, 1)]).distances_from(0) == (0, 1, None)
    assert complete(3).distances_from(1) == (1, 0, 1)


def test_distance_step_property():
    # adjacent vertices differ by at most one in distance from any source
    for n in range(1, 6):
        for g in enumerate_connected_graphs(n):
            for src in range(g.n):
                dist = g.distances_from(src)
                for u, v in g.edges():
                    assert abs(dist[u] - dist[v]) <= 1


# ---------------------------------------------------------------------------
# graph6


def test_graph6_known_vectors():
    assert encode_graph6(complete(1)) == "@"
    assert encode_graph6(complete(2)) == "A_"
    assert encode_graph6(complete(3)) == "Bw"
    assert encode_graph6(Graph(2)) == "A?"
    assert parse_graph6("@") == complete(1)
    assert parse_graph6("A_") == complete(2)
    assert parse_graph6("Bw") == complete(3)
    assert parse_graph6("Bg") == path(3)


def test_graph6_round_trip_enumerated():
    for n in range(1, 6):
        for g in enumerate_connected_graphs(n):
            assert parse_graph6(encode_graph6(g)) == g


def test_graph6_matches_reference_codec():
    for n in range(1, 6):
        for g in enumerate_connected_graphs(n):
            ref = nx.Graph()
            ref.add_nodes_from(range(g.n))
            ref.add_edges_from(g.edges())
            expected = nx.to_graph6_bytes(ref, header=False).strip().decode()
            assert encode_graph6(g) == expected
            parsed = parse_graph6(expected)
            assert parsed == g


@st.composite
def random_graphs(draw):
    n = draw(st.integers(min_value=1, max_value=12))
    edges = [
        pair
        for pair in itertools.combinations(range(n), 2)
        if draw(st.booleans())
    ]
    return Graph(n, edges)


@given(random_graphs())
@settings(max_examples=60, deadline=None)
def test_graph6_round_trip_random(g):
    text = encode_graph6(g)
    assert parse_graph6(text) == g
    ref = nx.Graph()
    ref.add_nodes_from(range(g.n))
    ref.add_edges_from(g.edges())
    assert text == nx.to_graph6_bytes(ref, header=False).strip().decode()


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("", "empty"),
        ("A_extra", "byte 2"),          # trailing garbage
        ("A", "byte 1"),                # truncated
        ("A\x1f", "byte 1"),            # non-printable data byte
        ("~??", "byte 0"),              # multi-byte header
        ("?", "byte 0"),                # zero vertices
        ("AW", "byte 1"),               # nonzero padding bits
    ],
)
def test_graph6_parse_errors(text, fragment):
    with pytest.raises(FormatError) as exc:
        parse_graph6(text)
    assert fragment in str(exc.value)


# ---------------------------------------------------------------------------
# edge-list format


def test_edge_list_round_trip():
    g = Graph(4, [(0, 1), (1, 2), (0, 3)])
    assert parse_edge_list(format_edge_list(g)) == g
    assert format_edge_list(complete(1)) == "n 1\n"


def test_edge_list_parses_loose_whitespace():
    assert parse_edge_list("n 3\n\n0 1\n 1 2 \n") == path(3)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("", "line 1"),
        ("3\n0 1\n", "header"),
        ("n 0\n", "at least 1"),
        ("n 2\n0 0\n", "self-loop"),
        ("n 2\n0 1\n1 0\n", "duplicate"),
        ("n 2\n0 3\n", "out of range"),
        ("n 2\n0 x\n", "non-integer"),
        ("n 2\n0 1 2\n", "expected 'u v'"),
    ],
)
def test_edge_list_errors(text, fragment):
    with pytest.raises(FormatError) as exc:
        parse_edge_list(text)
    assert fragment in str(exc.value)


# ---------------------------------------------------------------------------
# enumeration


def test_enumeration_counts_small():
    counts = [sum(1 for _ in enumerate_connected_graphs(n)) for n in range(1, 7)]
    assert counts == [1, 1, 2, 6, 21, 112]


def test_enumeration_matches_pairwise_oracle():
    for n in range(1, 6):
        assert sum(1 for _ in enumerate_connected_graphs(n)) == connected_class_count(n)


@pytest.mark.slow
def test_enumeration_matches_pairwise_oracle_n6():
    assert sum(1 for _ in enumerate_connected_graphs(6)) == connected_class_count(6)


@pytest.mark.slow
def test_enumeration_count_n7():
    assert sum(1 for _ in enumerate_connected_graphs(7)) == 853


def test_enumeration_sound():
    # every emitted graph is connected; no two on the same n are isomorphic
    for n in range(1, 6):
        reps = list(enumerate_connected_graphs(n))
        assert all(g.is_connected() for g in reps)
        for a, b in itertools.combinations(reps, 2):
            assert not is_isomorphic(a, b)


def test_enumeration_deterministic_and_restartable():
    first = [encode_graph6(g) for g in enumerate_connected_graphs(5)]
    second = [encode_graph6(g) for g in enumerate_connected_graphs(5)]
    assert first == second
    stream = enumerate_connected_graphs(3)
    assert next(stream) is not None


def test_enumeration_range_errors():
    with pytest.raises(UsageError):
        enumerate_connected_graphs(0)
    with pytest.raises(UsageError):
        enumerate_connected_graphs(8)
