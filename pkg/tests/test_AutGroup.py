import itertools

import pytest
from sympy.combinatorics import Permutation as SymPermutation
from sympy.combinatorics import PermutationGroup

from Certifier.AutGroup import (
    PermGroup, Permutation, automorphisms, cyclic_group, group_isomorphism, groups_isomorphic,
    is_automorphism, label_map, permutation_from_label_map, pgl2, symmetric_group,
)
from Certifier.GraphCore import complete_graph, cycle_graph, path_graph, petersen
from Certifier.Utilities import InputError


def sympy_order(group: PermGroup) -> int:
    gens = [SymPermutation([x - 1 for x in g.images]) for g in group.generators]
    return PermutationGroup(gens).order()


def test_permutation_basics():
    p = Permutation((2, 3, 1))
    q = Permutation((2, 1, 3))
    assert (p * q)(1) == p(q(1)) == 3
    assert p * p.inverse() == Permutation.identity(3)
    assert p.order() == 3
    assert Permutation.identity(4).order() == 1
    assert Permutation.from_cycles(5, [(1, 2), (3, 4, 5)]).order() == 6
    assert str(p) == "(2 3 1)"


def test_permutation_rejects_non_bijection():
    with pytest.raises(InputError):
        Permutation((1, 1, 2))


def test_heawood_automorphism_group(heawood_graph, heawood_aut):
    assert heawood_aut.order == 336
    assert heawood_aut.is_point_transitive()
    assert heawood_aut.orbit_of_point(1) == list(range(1, 15))
    assert 1 <= len(heawood_aut.generators) <= 4
    assert heawood_aut.generated_by_generators()
    assert sympy_order(heawood_aut) == 336


def test_heawood_automorphisms_preserve_adjacency(heawood_graph, heawood_aut):
    edges = set(heawood_graph.edges())
    for p in heawood_aut.elements:
        assert is_automorphism(heawood_graph, p)
        mapping = label_map(heawood_graph, p)
        assert {tuple(sorted((mapping[u], mapping[v]))) for u, v in edges} == edges


def test_heawood_group_is_closed(heawood_aut):
    assert heawood_aut.is_closed()


@pytest.mark.parametrize("graph, order", [
    (complete_graph(3), 6),
    (cycle_graph(6), 12),
    (petersen(), 120),
    (path_graph(4), 2),
    (complete_graph(5), 120),
])
def test_small_automorphism_groups(graph, order):
    group = automorphisms(graph)
    assert group.order == order
    assert group.is_closed()


def test_refinement_does_not_change_the_group():
    g = petersen()
    assert automorphisms(g, refine=False).elements == automorphisms(g).elements


def test_brute_force_bijections_agree_on_hexagon():
    g = cycle_graph(6)
    brute = sorted(p for p in (Permutation(images) for images in itertools.permutations(range(1, 7)))
                   if is_automorphism(g, p))
    assert tuple(brute) == automorphisms(g).elements


def test_automorphisms_reject_large_graphs():
    with pytest.raises(InputError):
        automorphisms(cycle_graph(21))


def test_label_maps_round_trip(heawood_graph, heawood_aut):
    p = heawood_aut.generators[0]
    assert permutation_from_label_map(heawood_graph, label_map(heawood_graph, p)) == p


@pytest.mark.parametrize("q, points", [(2, 3), (3, 4), (5, 6), (7, 8)])
def test_pgl2_orders(q, points):
    group = pgl2(q)
    assert group.degree == points
    assert group.order == q * (q - 1) * (q + 1)
    assert group.generated_by_generators()
    assert len(group.generators) <= 4


def test_pgl2_rejects_non_primes():
    with pytest.raises(InputError):
        pgl2(4)
    with pytest.raises(InputError):
        pgl2(1)


def test_pgl2_three_is_symmetric_group():
    assert pgl2(3).order == 24
    assert groups_isomorphic(pgl2(3), symmetric_group(4))


def test_heawood_group_is_pgl2_seven(heawood_aut):
    assert groups_isomorphic(heawood_aut, pgl2(7))
    phi = group_isomorphism(heawood_aut, pgl2(7))
    a, b = heawood_aut.elements[5], heawood_aut.elements[100]
    assert phi[a * b] == phi[a] * phi[b]


def test_triangle_group_is_pgl2_two():
    assert groups_isomorphic(automorphisms(complete_graph(3)), pgl2(2))


def test_dihedral_and_cyclic_groups_of_order_twelve_differ():
    dihedral = automorphisms(cycle_graph(6))
    cyclic = cyclic_group(12)
    assert dihedral.order == cyclic.order == 12
    assert dihedral.order_histogram() != cyclic.order_histogram()
    assert not groups_isomorphic(dihedral, cyclic)


def test_isomorphism_is_reflexive_and_symmetric():
    groups = [automorphisms(cycle_graph(6)), cyclic_group(12), symmetric_group(4), pgl2(3), pgl2(2)]
    for a in groups:
        assert groups_isomorphic(a, a)
        for b in groups:
            assert groups_isomorphic(a, b) == groups_isomorphic(b, a)


def test_same_histogram_non_isomorphic_groups():
    # Z4 x Z4 against Z4 acting on Z4 by inversion: both have 3 involutions and 12 elements of order 4.
    z4xz4 = PermGroup.from_generators(8, [
        Permutation.from_cycles(8, [(1, 2, 3, 4)]),
        Permutation.from_cycles(8, [(5, 6, 7, 8)]),
    ])
    semidirect = PermGroup.from_generators(8, [
        Permutation.from_cycles(8, [(1, 2, 3, 4)]),
        Permutation.from_cycles(8, [(1, 3), (5, 6, 7, 8)]),
    ])
    assert z4xz4.order == semidirect.order == 16
    assert z4xz4.order_histogram() == semidirect.order_histogram()
    assert not groups_isomorphic(z4xz4, semidirect)


def test_group_json(heawood_aut):
    data = heawood_aut.to_json()
    assert data["degree"] == 14
    assert data["order"] == 336
    assert len(data["generators"]) == len(heawood_aut.generators)


@pytest.fixture(scope="module")
def clique_union_group(clique_union):
    return automorphisms(clique_union)


def test_large_group_still_generated_by_its_generators(clique_union_group):
    assert clique_union_group.order == 120 * 24 * 10
    assert clique_union_group.generated_by_generators()


def test_order_mismatch_is_decided_before_the_size_limit(clique_union_group):
    assert group_isomorphism(clique_union_group, pgl2(7)) is None
    assert not groups_isomorphic(pgl2(7), clique_union_group)
    with pytest.raises(InputError):
        groups_isomorphic(clique_union_group, clique_union_group)
