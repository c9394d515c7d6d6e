import random

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs
from oracles import to_nx
from turanlab import Graph, Graph6ParseError, complete, decode_graph6, empty, encode_graph6
from turanlab.graph6 import read_graph6_file, write_graph6_file


def test_golden_values():
    assert encode_graph6(complete(3)) == "Bw"
    assert encode_graph6(empty(0)) == "?"
    assert encode_graph6(empty(1)) == "@"
    assert decode_graph6("Bw") == complete(3)
    assert decode_graph6("?") == empty(0)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=20))
def test_matches_networkx(g):
    want = nx.to_graph6_bytes(to_nx(g), header=False).decode("ascii").strip()
    assert encode_graph6(g) == want


def test_random_round_trips():
    rng = random.Random(20240601)
    for _ in range(10_000):
        n = rng.randint(0, 62)
        p = rng.random()
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        assert decode_graph6(encode_graph6(g)) == g


@pytest.mark.parametrize("bad, offset", [
    ("", 0),
    ("B", 1),
    ("Bww", 2),
    ("Bx", 1),
    ("B\x7f", 1),
    ("B w", 1),
    (">>graph6<<Bw", 0),
    ("~?@A", 0),
    (b"B\xc3\xa9", 1),
])
def test_malformed_input(bad, offset):
    with pytest.raises(Graph6ParseError) as info:
        decode_graph6(bad)
    assert info.value.offset == offset


def test_encode_capacity():
    with pytest.raises(ValueError):
        encode_graph6(empty(63))


def test_file_round_trip(tmp_path):
    gs = [empty(0), complete(3), complete(7)]
    p = tmp_path / "g.g6"
    write_graph6_file(p, gs)
    assert read_graph6_file(p) == gs
    p.write_text("Bw\nBx\n")
    with pytest.raises(Graph6ParseError) as info:
        read_graph6_file(p)
    assert "line 2" in str(info.value)
