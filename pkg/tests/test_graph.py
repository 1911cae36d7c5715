import itertools

import pytest

from zonotopal.errors import CapExceededError, GraphFormatError, InputError
from zonotopal.families import (chain, complete, cycle, dn, dn_hat, family_names, fork_leg,
                                generate_family, k3_plus_e, leg)
from zonotopal.graph import (Multigraph, format_graph, graded_hilbert, parse_graph,
                             spanning_forest_count, trim)

from oracles import brute_force_forests


def test_parse_first_appearance_order():
    g = parse_graph("a b\nb c")
    assert g.labels == ("a", "b", "c")
    assert g.ends == ((0, 1), (1, 2))


def test_parse_loop_and_parallel_edges():
    assert parse_graph("a a").ends == ((0, 0),)
    g = parse_graph("a b\na b")
    assert g.n_vertices == 2 and g.ends == ((0, 1), (0, 1))


def test_parse_header_fixes_order_and_comments():
    g = parse_graph("# triangle\nvertices: c b a\na b  # first\nb c\nc a\n")
    assert g.labels == ("c", "b", "a")
    assert g.ends == ((1, 2), (0, 1), (0, 2))
    assert parse_graph(format_graph(g)) == g


def test_parse_header_with_isolated_vertex_and_empty_edge_set():
    g = parse_graph("vertices: x y z\nx y")
    assert g.n_vertices == 3 and g.degrees() == [1, 1, 0]
    assert parse_graph("").n_vertices == 0


@pytest.mark.parametrize("text, where", [
    ("a b c", "line 1"),
    ("a b\nq", "line 2"),
    ("vertices: a b\na c", "line 2"),
    ("a b\nvertices: a b", "line 2"),
    ("vertices: a a", "line 1"),
])
def test_parse_errors_name_the_line(text, where):
    with pytest.raises(GraphFormatError, match=where):
        parse_graph(text)


def test_degrees_ignore_loops_and_cut_sizes():
    g = Multigraph.from_edges(3, [(0, 1), (0, 1), (1, 2), (2, 2)])
    assert g.degrees() == [2, 3, 1]
    assert g.max_degree() == 3
    assert g.cut_size([0]) == 2
    assert g.cut_size([0, 1]) == 1
    assert g.cut_size([0, 1, 2]) == 0


def test_delete_edge():
    a3 = chain(3)
    g = a3.delete_edge(1)
    assert g.ends == ((0, 1),) and g.n_vertices == 3
    loop = Multigraph.from_edges(2, [(0, 1), (1, 1)])
    assert loop.delete_edge(1).ends == ((0, 1),)
    double = Multigraph.from_edges(2, [(0, 1), (0, 1)])
    assert double.delete_edge(0).ends == ((0, 1),)
    with pytest.raises(InputError):
        a3.delete_edge(5)


def test_contract_edge():
    k3 = complete(3)
    assert k3.contract_edge(0).ends == ((0, 1), (0, 1))
    double = Multigraph.from_edges(2, [(0, 1), (0, 1)])
    once = double.contract_edge(0)
    assert once.n_vertices == 1 and once.ends == ((0, 0),)
    a4 = chain(4)
    assert a4.contract_edge(2).ends == chain(3).ends
    with pytest.raises(InputError):
        once.contract_edge(0)


def test_identify_endpoints_keeps_edge_ids():
    g = cycle(4).identify_endpoints(1)
    assert g.n_edges == 4 and g.ends[1] == (1, 1)
    assert g.labels == ("v0", "v1+v2", "v3")


def test_reorder_and_spanning_subgraph():
    g = cycle(4)
    r = g.reorder([3, 2, 1, 0])
    assert r.degrees() == [2, 2, 2, 2]
    assert sorted(r.ends) == sorted(g.ends)
    assert g.delete_edge(0).is_spanning_subgraph_of(g)
    assert not g.is_spanning_subgraph_of(g.delete_edge(0))
    with pytest.raises(InputError):
        g.reorder([0, 0, 1, 2])


@pytest.mark.parametrize("graph, forests", [
    (complete(3), 7),
    (chain(5), 16),
    (cycle(4), 15),
    (complete(4), 38),
    (k3_plus_e(), 10),
    (Multigraph.from_edges(1, [(0, 0)]), 1),
])
def test_forest_counts(graph, forests):
    assert spanning_forest_count(graph) == forests
    assert brute_force_forests(graph) == forests


@pytest.mark.parametrize("graph, expected", [
    (complete(3), (1, 2, 3, 1)),
    (chain(4), (1, 3, 3, 1)),
    (complete(4), (1, 3, 6, 10, 11, 6, 1)),
    (k3_plus_e(), (1, 2, 3, 3, 1)),
    (Multigraph.from_edges(2, []), (1,)),
])
def test_graded_hilbert(graph, expected):
    assert graded_hilbert(graph) == expected
    assert sum(expected) == spanning_forest_count(graph)


def test_graded_hilbert_satisfies_deletion_contraction():
    g = complete(4)
    for e in range(g.n_edges):
        rest = trim(a + b for a, b in itertools.zip_longest(
            graded_hilbert(g.contract_edge(e)), (0,) + graded_hilbert(g.delete_edge(e)), fillvalue=0))
        assert rest == graded_hilbert(g)


def test_edge_cap():
    with pytest.raises(CapExceededError):
        spanning_forest_count(complete(8), max_edges=24)


def test_family_shapes():
    assert dn(5).degrees() == [1, 2, 3, 1, 1]
    assert dn_hat(6).degrees() == [1, 3, 3, 1, 1, 1]
    assert leg(2, 7).ends == dn(7).ends
    assert fork_leg(3, 7).degrees() == [1, 2, 3, 3, 1, 1, 1]
    assert generate_family("leg(3)", 6).degrees() == [1, 2, 3, 2, 1, 1]
    assert generate_family("kn_minus_edge", 5).n_edges == 9
    assert generate_family("kn_minus_two_disjoint", 5).n_edges == 8
    assert "chain" in family_names()


@pytest.mark.parametrize("token, n", [("nope", 5), ("leg", 5), ("chain(2)", 5), ("leg(9)", 5),
                                      ("cycle", 2), ("chain", None)])
def test_family_errors(token, n):
    with pytest.raises(InputError):
        generate_family(token, n)
