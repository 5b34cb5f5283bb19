from itertools import product as cartesian

import pytest

from symbolic_powers.engine import (
    CapExceededError, MonomialIdeal, ParseError, SimpleGraph, brute_force_vertex_covers,
    complete_graph, complete_multipartite, cycle_graph, edge_ideal, is_vertex_cover,
    lifted_minimal_covers, minimal_vertex_covers, parallelize, parse_graph, path_graph,
    read_edge_list,
)
from symbolic_powers.engine.graph import ParallelizationSpec, is_complete, parse_alpha


SMALL_GRAPHS = {
    "K2": complete_graph(2),
    "K3": complete_graph(3),
    "K4": complete_graph(4),
    "P3": path_graph(3),
    "C4": cycle_graph(4),
    "C5": cycle_graph(5),
}


def test_edges_are_normalized():
    G = SimpleGraph(3, ((2, 1), (3, 2)))
    assert G.edges == ((1, 2), (2, 3))
    assert G.neighbors(2) == frozenset({1, 3})


@pytest.mark.parametrize("edges", [((1, 1),), ((1, 2), (2, 1)), ((1, 4),)])
def test_invalid_graphs(edges):
    with pytest.raises(ValueError):
        SimpleGraph(3, edges)


def test_builtin_constructors():
    assert len(complete_graph(5).edges) == 10
    assert path_graph(4).edges == ((1, 2), (2, 3), (3, 4))
    assert cycle_graph(4).edges == ((1, 2), (1, 4), (2, 3), (3, 4))
    assert is_complete(complete_graph(4))
    assert not is_complete(path_graph(3))
    with pytest.raises(ValueError):
        cycle_graph(2)


def test_edge_ideal_of_triangle():
    assert edge_ideal(complete_graph(3)) == MonomialIdeal(3, [(1, 1, 0), (1, 0, 1), (0, 1, 1)])


def test_minimal_covers_examples():
    assert minimal_vertex_covers(complete_graph(3)) == [(1, 2), (1, 3), (2, 3)]
    assert minimal_vertex_covers(path_graph(3)) == [(1, 3), (2,)]
    assert minimal_vertex_covers(cycle_graph(4)) == [(1, 3), (2, 4)]


def test_isolated_vertex_never_in_a_cover():
    G = SimpleGraph(3, ((1, 2),))
    assert minimal_vertex_covers(G) == [(1,), (2,)]


def test_edgeless_graph_has_empty_cover():
    assert minimal_vertex_covers(SimpleGraph(3)) == [()]


@pytest.mark.parametrize("name", sorted(SMALL_GRAPHS))
def test_covers_agree_with_brute_force(name):
    G = SMALL_GRAPHS[name]
    covers = minimal_vertex_covers(G)
    assert covers == brute_force_vertex_covers(G)
    assert all(is_vertex_cover(G, W) for W in covers)


def test_vertex_cap():
    with pytest.raises(CapExceededError):
        minimal_vertex_covers(complete_graph(6), vertex_cap=5)


def test_parallelization_of_an_edge():
    G, spec = parallelize(complete_graph(2), (2, 2))
    assert G.vertex_count == 4
    assert G.edges == ((1, 3), (1, 4), (2, 3), (2, 4))
    assert G.labels == ("x1_1", "x1_2", "x2_1", "x2_2")
    assert spec.factor == 4
    assert spec.origin(3) == (2, 1)


def test_parallelization_spec_validation():
    with pytest.raises(ValueError):
        ParallelizationSpec.from_alpha((1, 0))
    with pytest.raises(ValueError):
        parallelize(complete_graph(3), (1, 2))
    assert ParallelizationSpec.from_alpha((1, 1, 1)).is_identity


def _lifted_case(name, alpha):
    G = SMALL_GRAPHS[name]
    big, spec = parallelize(G, alpha)
    assert lifted_minimal_covers(G, spec) == brute_force_vertex_covers(big)


@pytest.mark.parametrize("name,alpha", [
    ("K2", (2, 3)), ("K3", (2, 1, 1)), ("K3", (2, 2, 2)), ("P3", (1, 3, 1)),
    ("C4", (2, 1, 2, 1)), ("C5", (1, 2, 1, 1, 2)), ("K4", (3, 1, 1, 2)),
])
def test_lifted_covers_match_brute_force(name, alpha):
    _lifted_case(name, alpha)


@pytest.mark.slow
@pytest.mark.parametrize("name", sorted(SMALL_GRAPHS))
def test_lifted_covers_full_grid(name):
    G = SMALL_GRAPHS[name]
    for alpha in cartesian(range(1, 4), repeat=G.vertex_count):
        _lifted_case(name, alpha)


def test_complete_multipartite():
    G, spec = complete_multipartite((1, 2, 3))
    assert G.vertex_count == 6
    assert len(G.edges) == 1 * 2 + 1 * 3 + 2 * 3
    assert spec.alpha == (1, 2, 3)


def test_parse_graph_builtins():
    assert parse_graph("complete:4") == complete_graph(4)
    assert parse_graph("path:3") == path_graph(3)
    assert parse_graph("cycle:5") == cycle_graph(5)
    assert parse_graph("multipartite:2,2").vertex_count == 4
    with pytest.raises(ParseError):
        parse_graph("cycle:2")
    with pytest.raises(ParseError):
        parse_graph("complete:x")


def test_read_edge_list(tmp_path):
    path = tmp_path / "c4.txt"
    path.write_text("# quadrato\n4\n1 2\n2 3\n\n3 4\n4 1  # chiude\n", encoding="utf-8")
    assert read_edge_list(path) == cycle_graph(4)
    assert parse_graph(str(path)) == cycle_graph(4)


@pytest.mark.parametrize("content", ["", "3\n1 2 3\n", "3\n1 1\n", "tre\n"])
def test_read_edge_list_errors(tmp_path, content):
    path = tmp_path / "bad.txt"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(ParseError):
        read_edge_list(path)


def test_read_edge_list_missing_file(tmp_path):
    with pytest.raises(ParseError):
        read_edge_list(tmp_path / "nope.txt")


def test_parse_alpha():
    assert parse_alpha("2,1,1") == (2, 1, 1)
    for bad in ("2,0", "a,b", ""):
        with pytest.raises(ParseError):
            parse_alpha(bad)


def test_variable_names_follow_labels():
    assert complete_graph(2).variable_names() == ["x1", "x2"]
    G, _ = parallelize(complete_graph(2), (2, 1))
    assert G.variable_names() == ["x1_1", "x1_2", "x2_1"]
