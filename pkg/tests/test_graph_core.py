import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from recolour.colouring import is_proper, respects_lists
from recolour.graph_core import (
    Graph,
    ParseError,
    complete_bipartite,
    complete_bipartite_minus_matching,
    degeneracy,
    forcing_gadget,
    format_graph,
    frozen_list_instance,
    graph_stats,
    k18_list_instance,
    layered_example,
    matching_number,
    parse_graph,
    path,
    path_plus_chain,
)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, edges)


def test_complete_bipartite_star():
    g = complete_bipartite(1, 2)
    assert g.n == 3 and g.m == 2
    assert g.bipartition == (frozenset({0}), frozenset({1, 2}))


@pytest.mark.parametrize("p,q", [(2, 3), (18, 18), (1, 1), (4, 7)])
def test_complete_bipartite_edge_count(p, q):
    g = complete_bipartite(p, q)
    assert (g.n, g.m) == (p + q, p * q)


def test_complete_bipartite_rejects_empty_part():
    with pytest.raises(ValueError):
        complete_bipartite(0, 3)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_minus_matching_shape(m):
    g = complete_bipartite_minus_matching(m)
    assert g.m == m * (m - 1)
    assert all(g.degree(v) == m - 1 for v in range(2 * m))
    assert all((i, m + i) not in g.edges for i in range(m))


def test_minus_matching_needs_two():
    with pytest.raises(ValueError):
        complete_bipartite_minus_matching(1)


def test_path_basics():
    assert path(1).m == 0
    assert path(2).edges == frozenset({(0, 1)})
    g = path(5)
    assert g.m == 4 and matching_number(g) == 2 and degeneracy(g) == 1


def test_layered_example_stats():
    g = layered_example()
    s = graph_stats(g)
    assert (s.n, s.matching_number, s.degeneracy) == (10, 4, 2)
    U, V = g.bipartition
    assert sorted(map(len, (U, V))) == [4, 6]
    assert U == frozenset({0, 4, 5, 6})


def test_layered_example_is_split_k44_minus_matching():
    # K_{4,4} - M with vertex 0 on one side replaced by three copies, each keeping two of its three neighbours
    base = complete_bipartite_minus_matching(4)
    h = nx.Graph()
    h.add_edges_from((u, v) for u, v in base.edges if u != 0)
    nbrs = sorted(v for u, v in base.edges if u == 0)
    for idx, keep in enumerate(itertools.combinations(nbrs, 2)):
        h.add_edges_from((f"s{idx}", v) for v in keep)
    assert nx.is_isomorphic(h, to_nx(layered_example()))


def test_degeneracy_k33():
    assert degeneracy(complete_bipartite(3, 3)) == 3


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_matching_number_matches_networkx(g):
    assert matching_number(g) == len(nx.max_weight_matching(to_nx(g), maxcardinality=True))


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_degeneracy_matches_core_number(g):
    cores = nx.core_number(to_nx(g))
    assert degeneracy(g) == max(cores.values(), default=0)
    assert degeneracy(g) <= g.max_degree


def test_matching_on_stored_bipartition_matches_networkx():
    for g in (complete_bipartite(3, 5), complete_bipartite_minus_matching(5), layered_example()):
        assert matching_number(g) == len(nx.max_weight_matching(to_nx(g), maxcardinality=True))


def test_forcing_gadget_two_two():
    g, lists, special = forcing_gadget(2, 2)
    assert (g.n, g.m) == (5, 6)
    assert lists[:2] == (frozenset({1, 2}), frozenset({3, 4}))
    assert set(lists[2:]) == {frozenset({1, 4}), frozenset({2, 3}), frozenset({2, 4})}
    assert special == [0, 1]


def test_forcing_gadget_four_four():
    g, lists, special = forcing_gadget(4, 4)
    big = lists[4:]
    assert g.n == 4 + 255 and len(set(big)) == 255
    assert frozenset({1, 5, 9, 13}) not in big
    for L in big:
        assert all(len(L & lists[i]) == 1 for i in special)


def test_forcing_gadget_rejects_small_params():
    with pytest.raises(ValueError):
        forcing_gadget(1, 3)


def test_path_plus_chain_sizes():
    g, lists = path_plus_chain(1)
    assert g.n == 260
    g, lists = path_plus_chain(3)
    assert g.n == 780
    assert all(lists[i] == frozenset({1, 17, 18, 19}) for i in range(3))
    g, _ = path_plus_chain(2)
    assert sum(1 for u, v in g.edges if u < 2 and v >= 2) == 2


def test_k18_instance():
    g, lists, a, b = k18_list_instance()
    assert (g.n, g.m) == (36, 324)
    assert len(set(lists)) == 5
    assert sorted(a[:18]) == [1] * 6 + [3] * 6 + [5] * 6
    for c in (a, b):
        assert is_proper(g, c) and respects_lists(lists, c)


def test_frozen_list_instance():
    g, lists, phi = frozen_list_instance(4)
    assert phi == (2, 3, 4, 1) * 2
    assert all(len(L) == 3 for L in lists)
    with pytest.raises(ValueError):
        frozen_list_instance(3)


def test_graph_rejects_loops_and_bad_bipartition():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 1)], (frozenset({0, 1}), frozenset({2})))
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 1), (1, 0)])


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_graph_text_round_trip(g):
    assert parse_graph(format_graph(g)) == g


@pytest.mark.parametrize(
    "g", [complete_bipartite(2, 3), layered_example(), complete_bipartite_minus_matching(4), path(3)]
)
def test_graph_text_round_trip_keeps_parts(g):
    back = parse_graph(format_graph(g))
    assert back == g and back.bipartition == g.bipartition


@pytest.mark.parametrize(
    "text,line",
    [
        ("graph 3\ne 0 1\ne 1 x\n", 3),
        ("graph 3\ne 0 5\n", 2),
        ("grph 3\n", 1),
        ("graph 2\ne 0 1", 2),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as err:
        parse_graph(text)
    assert err.value.lineno == line
