import pytest

from Certifier.Family import (
    DELTA_Y, Y_DELTA, ExchangeMove, apply_move, available_moves, delta_y, family_index, k7_family,
    triangles, y_delta,
)
from Certifier.GraphCore import Graph, complete_graph, cycle_graph, find_isomorphism, heawood
from Certifier.Utilities import InputError


@pytest.fixture(scope="module")
def family():
    return k7_family()


@pytest.fixture(scope="module")
def two_way_family():
    return k7_family(include_y_delta=True)


def isomorphic_to_some(g, members):
    return any(find_isomorphism(g, h) is not None for h in members)


def test_triangles():
    assert triangles(complete_graph(4)) == [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
    assert triangles(heawood()) == []


def test_delta_y_on_k4():
    g = delta_y(complete_graph(4), (1, 2, 3))
    assert g.n == 5
    assert g.edge_count == 6
    assert g.neighbors(5) == (1, 2, 3)
    assert not g.has_edge(1, 2)


def test_delta_y_then_y_delta_round_trip():
    k4 = complete_graph(4)
    back = y_delta(delta_y(k4, (2, 3, 4)), 5)
    assert back.edge_count == 6
    assert find_isomorphism(back, k4) is not None


def test_delta_y_on_k7():
    g = delta_y(complete_graph(7), (1, 2, 3))
    assert (g.n, g.edge_count) == (8, 21)


def test_delta_y_rejects_non_triangles():
    with pytest.raises(InputError):
        delta_y(cycle_graph(4), (1, 2, 3))


def test_y_delta_on_heawood_vertex():
    g = y_delta(heawood(), 1)
    assert (g.n, g.edge_count) == (13, 21)


def test_y_delta_guards_parallel_edges():
    g = Graph.from_edges([(1, 2), (1, 3), (1, 4), (2, 3)])
    assert y_delta(g, 1) is None
    with pytest.raises(InputError):
        apply_move(g, ExchangeMove(Y_DELTA, (1,)))


def test_y_delta_rejects_wrong_degree():
    with pytest.raises(InputError):
        y_delta(cycle_graph(5), 1)


def test_available_moves_order():
    moves = available_moves(delta_y(complete_graph(5), (1, 2, 3)))
    assert moves[0].kind == DELTA_Y
    assert [m for m in moves if m.kind == Y_DELTA] == [ExchangeMove(Y_DELTA, (6,))]
    assert all(m.kind == DELTA_Y for m in available_moves(complete_graph(5), include_y_delta=False))


def test_family_has_fourteen_members(family):
    assert len(family) == 14
    assert all(g.edge_count == 21 for g in family)
    assert all(g.is_connected() for g in family)
    assert sorted({g.n for g in family}) == list(range(7, 15))
    assert find_isomorphism(family[0], complete_graph(7)) is not None


def test_unique_fourteen_vertex_member_is_heawood(family):
    largest = [g for g in family if g.n == 14]
    assert len(largest) == 1
    assert find_isomorphism(largest[0], heawood()) is not None
    index = family_index(family)
    assert sum(entry["is_heawood"] for entry in index["members"]) == 1
    assert [entry["id"] for entry in index["members"]] == list(range(1, 15))


def test_members_are_pairwise_non_isomorphic(family):
    for i, g in enumerate(family):
        for h in family[i + 1:]:
            assert find_isomorphism(g, h) is None


def test_delta_y_closure_is_a_fixed_point(family):
    for g in family:
        for move in available_moves(g, include_y_delta=False):
            assert isomorphic_to_some(apply_move(g, move), family)


def test_round_trip_on_every_member(family):
    for g in family:
        for t in triangles(g):
            h = delta_y(g, t)
            assert find_isomorphism(y_delta(h, max(h.labels)), g) is not None


def test_two_way_closure_extends_the_family(family, two_way_family):
    assert len(two_way_family) == 20
    assert all(isomorphic_to_some(g, two_way_family) for g in family)
    assert all(g.edge_count == 21 and g.is_connected() for g in two_way_family)
    assert sorted({g.n for g in two_way_family}) == list(range(7, 15))


def test_two_way_closure_is_a_fixed_point(two_way_family):
    for g in two_way_family:
        for move in available_moves(g):
            assert isomorphic_to_some(apply_move(g, move), two_way_family)


def test_family_is_deterministic(family):
    again = k7_family()
    assert [g.edges() for g in again] == [g.edges() for g in family]
