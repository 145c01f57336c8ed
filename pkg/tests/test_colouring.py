import pytest
from hypothesis import given, settings, strategies as st

from recolour.colouring import (
    Lists,
    Uniform,
    colour_classes,
    colour_split,
    format_colouring,
    format_lists,
    is_frozen,
    is_proper,
    parse_colouring,
    parse_lists,
    respects_lists,
    same_partition,
)
from recolour.graph_core import ParseError, complete_bipartite, frozen_list_instance, path


def test_is_proper_on_path():
    g = path(3)
    assert is_proper(g, (1, 2, 1))
    assert not is_proper(g, (1, 1, 2))
    with pytest.raises(ValueError):
        is_proper(g, (1, 2))


def test_respects_lists():
    lists = (frozenset({1, 2}), frozenset({3}))
    assert respects_lists(lists, (2, 3))
    assert not respects_lists(Lists(lists), (3, 3))


def test_lists_reject_empty():
    with pytest.raises(ValueError):
        Lists((frozenset(),))
    with pytest.raises(ValueError):
        Uniform(0)


def test_colour_classes_and_partition():
    assert colour_classes((1, 2, 1)) == {1: frozenset({0, 2}), 2: frozenset({1})}
    assert same_partition((1, 2, 1), (3, 1, 3))
    assert not same_partition((1, 2, 1), (1, 1, 2))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=8), st.permutations(range(1, 9)))
def test_renamed_colouring_has_same_partition(c, perm):
    renamed = tuple(perm[x - 1] for x in c)
    assert same_partition(c, renamed)


@pytest.mark.parametrize("m", [4, 5])
def test_frozen_instance_is_frozen(m):
    g, lists, phi = frozen_list_instance(m)
    assert is_frozen(g, phi, Lists(lists))
    assert is_frozen(g, phi, Uniform(m))
    assert not is_frozen(g, phi, Uniform(m + 1))


def test_is_frozen_rejects_improper():
    with pytest.raises(ValueError):
        is_frozen(path(2), (1, 1), Uniform(2))


def test_path_two_colouring_is_frozen():
    assert is_frozen(path(4), (1, 2, 1, 2), Uniform(2))


def test_colour_split_orders_c3_larger():
    g = complete_bipartite(1, 3)
    V = range(1, 4)
    s = colour_split((1, 2, 3, 4), (2, 1, 1, 1), V)
    assert s.C1 == frozenset() and s.swapped
    assert len(s.C3) >= len(s.C2)
    s = colour_split((1, 2, 2, 3), (2, 3, 4, 1), V)
    assert s.C1 == frozenset({3}) and s.C2 == frozenset({2}) and s.C3 == frozenset({1, 4})
    assert is_proper(g, (1, 2, 2, 3))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(1, 30), min_size=1, max_size=20))
def test_colouring_round_trip(c):
    assert parse_colouring(format_colouring(c)) == tuple(c)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.frozensets(st.integers(1, 20), min_size=1, max_size=5), min_size=1, max_size=10))
def test_lists_round_trip(lists):
    assert parse_lists(format_lists(lists)) == tuple(lists)


def test_parse_colouring_errors():
    with pytest.raises(ParseError):
        parse_colouring("1 2\n3\n")
    with pytest.raises(ParseError):
        parse_colouring("1 0\n")
    with pytest.raises(ParseError) as err:
        parse_lists("1 2\n\n")
    assert err.value.lineno == 2
