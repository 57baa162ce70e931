import random

import pytest

from Certifier.CycleEnum import Cycle, DisjointPair
from Certifier.GraphCore import Graph, find_isomorphism, heawood, petersen
from Certifier.StructureChecks import (
    CHORDS, COMPLEMENT, DISTANCE3, PAIRCONFIG, TWELVE_CYCLE_CHORDS, CycleLabeling, LemmaVerdict,
    certify_heawood, check_disjoint_pair_configuration, check_distance_three_pair,
    check_hamiltonian_chord_pattern, check_twelve_cycle_complement, compare_with_reference,
    complement_pair, distance_three_pairs, labeling_automorphism, labelings, twelve_cycle_template,
    twelve_cycles_avoiding_pair,
)
from Certifier.Utilities import InputError

AVOIDING_TWELVE_CYCLES = {
    (1, 4): [(2, 3, 8, 9, 14, 13, 12, 7, 6, 5, 10, 11), (2, 3, 8, 7, 6, 5, 10, 9, 14, 13, 12, 11)],
    (1, 12): [(14, 9, 8, 7, 6, 5, 10, 11, 2, 3, 4, 13), (14, 9, 10, 11, 2, 3, 8, 7, 6, 5, 4, 13)],
    (1, 8): [(2, 3, 4, 5, 6, 7, 12, 13, 14, 9, 10, 11), (2, 3, 4, 13, 14, 9, 10, 5, 6, 7, 12, 11)],
    (1, 10): [(2, 3, 4, 5, 6, 7, 8, 9, 14, 13, 12, 11), (2, 3, 8, 9, 14, 13, 4, 5, 6, 7, 12, 11)],
}

CHECK_NAMES = [
    "vertex count", "girth", "census methods agree", "census matches reference",
    "disjoint 6-cycle pairs", "automorphism order", "isomorphic to PGL(2, 7)",
    "transitive on 14-cycles", "transitive on 12-cycles", "transitive on disjoint 6-cycle pairs",
    "chord pattern", "twelve-cycle complement", "distance-3 pairs", "disjoint pair configuration",
]


def swap_edges(g: Graph, remove, add) -> Graph:
    edges = [e for e in g.edges() if e not in remove] + list(add)
    return Graph.from_edges(edges, vertices=g.labels)


@pytest.fixture(scope="module")
def heawood_report(heawood_graph):
    return certify_heawood(heawood_graph, threads=1)


@pytest.fixture(scope="module")
def complement_verdicts(heawood_graph, heawood_cycles):
    return [check_twelve_cycle_complement(heawood_graph, c) for c in heawood_cycles[12]]


# ----------------------------------------------------------------------------
# labelings
# ----------------------------------------------------------------------------

def test_labelings_cover_rotations_and_reflections():
    c = Cycle.canonical((1, 2, 3, 4, 5))
    labels = [lab.labels for lab in labelings(c)]
    assert len(labels) == len(set(labels)) == 10
    assert labels[0] == (1, 2, 3, 4, 5)
    assert (5, 4, 3, 2, 1) in labels


def test_labeling_indexing_is_cyclic():
    lab = CycleLabeling(Cycle.canonical((1, 2, 3, 4, 5, 6)), offset=2)
    assert lab.labels == (3, 4, 5, 6, 1, 2)
    assert lab.x(1) == 3
    assert lab.x(0) == lab.x(6) == 2
    assert lab.x(8) == 4
    assert lab.positions()[1] == 5


def test_failing_verdict_needs_witness():
    with pytest.raises(InputError):
        LemmaVerdict(CHORDS, "(1 2 3)", False)


# ----------------------------------------------------------------------------
# chord pattern
# ----------------------------------------------------------------------------

def test_every_hamiltonian_cycle_has_the_chord_pattern(heawood_graph, heawood_cycles):
    verdicts = [check_hamiltonian_chord_pattern(heawood_graph, c) for c in heawood_cycles[14]]
    assert len(verdicts) == 24
    for verdict in verdicts:
        assert verdict.passed
        assert verdict.witness["plus_five_parity"] == "odd"
        assert len(verdict.witness["chords"]) == 7
        assert sorted(verdict.witness["labeling"]) == list(range(1, 15))


def test_outer_circle_chords(heawood_graph):
    verdict = check_hamiltonian_chord_pattern(heawood_graph, Cycle.canonical(range(1, 15)))
    assert verdict.passed
    assert verdict.witness["labeling"] == list(range(1, 15))
    assert verdict.witness["chords"][0] == [1, 6]
    assert {tuple(sorted(ch)) for ch in verdict.witness["chords"]} <= set(heawood_graph.edges())


def test_swapped_chords_break_the_pattern(heawood_graph):
    mutant = swap_edges(heawood_graph, remove={(1, 6), (3, 8)}, add=[(1, 8), (3, 6)])
    verdict = check_hamiltonian_chord_pattern(mutant, Cycle.canonical(range(1, 15)))
    assert not verdict.passed
    assert verdict.witness["i"] == 1
    assert verdict.witness["vertex"] == 1
    assert verdict.witness["chord_to"] == 8
    assert verdict.witness["offset"] == 7
    assert "skips 7 positions" in verdict.witness["reason"]


def test_chord_pattern_input_checks(heawood_graph):
    with pytest.raises(InputError):
        check_hamiltonian_chord_pattern(petersen(), Cycle.canonical(range(1, 11)))
    with pytest.raises(InputError):
        check_hamiltonian_chord_pattern(heawood_graph, Cycle.canonical((1, 2, 3, 4, 5, 6)))


# ----------------------------------------------------------------------------
# twelve-cycle complement
# ----------------------------------------------------------------------------

def test_every_twelve_cycle_has_the_complement_structure(heawood_graph, complement_verdicts):
    assert len(complement_verdicts) == 56
    for verdict in complement_verdicts:
        assert verdict.passed
        witness = verdict.witness
        assert witness["chords"] == [list(ch) for ch in TWELVE_CYCLE_CHORDS]
        positions = {label: i for i, label in enumerate(witness["labeling"], start=1)}
        assert sorted(positions[x] for x in heawood_graph.neighbors(witness["v"])) == [1, 5, 9]
        assert sorted(positions[x] for x in heawood_graph.neighbors(witness["w"])) == [4, 8, 12]
        assert not heawood_graph.has_edge(witness["v"], witness["w"])


def test_complement_pair_of_outer_twelve_cycle(heawood_graph, heawood_cycles):
    c = heawood_cycles[12][0]
    pair = complement_pair(heawood_graph, c)
    assert {pair.v, pair.w} == set(range(1, 15)) - c.vertex_set()
    with pytest.raises(InputError):
        complement_pair(heawood_graph, heawood_cycles[14][0])


def test_template_is_heawood():
    template = twelve_cycle_template()
    assert template.n == 14
    assert template.edge_count == 21
    assert find_isomorphism(template, heawood()) is not None


# ----------------------------------------------------------------------------
# distance-3 pairs
# ----------------------------------------------------------------------------

def test_distance_three_pairs(heawood_graph):
    pairs = distance_three_pairs(heawood_graph)
    assert len(pairs) == 28
    assert [v for u, v in pairs if u == 1] == [4, 8, 10, 12]


def test_distance_three_deletions_leave_two_twelve_cycles(heawood_graph):
    for u, v in distance_three_pairs(heawood_graph):
        verdict = check_distance_three_pair(heawood_graph, u, v)
        assert verdict.passed, verdict.witness
        assert len(verdict.witness["cycles"]) == 2


@pytest.mark.parametrize("pair", sorted(AVOIDING_TWELVE_CYCLES))
def test_surviving_twelve_cycles(heawood_graph, pair):
    expected = sorted(Cycle.canonical(seq) for seq in AVOIDING_TWELVE_CYCLES[pair])
    assert twelve_cycles_avoiding_pair(heawood_graph, *pair) == expected


def test_adjacent_pair_is_reported_with_its_distance(heawood_graph):
    verdict = check_distance_three_pair(heawood_graph, 1, 2)
    assert not verdict.passed
    assert verdict.witness["reason"] == "the vertices are at distance 1"
    assert verdict.witness["cycles"] == [str(c) for c in twelve_cycles_avoiding_pair(heawood_graph, 1, 2)]


def test_avoiding_pair_rejects_equal_vertices(heawood_graph):
    with pytest.raises(InputError):
        twelve_cycles_avoiding_pair(heawood_graph, 3, 3)


# ----------------------------------------------------------------------------
# disjoint pair configuration
# ----------------------------------------------------------------------------

def test_every_disjoint_pair_matches_the_template(heawood_graph, heawood_pairs):
    for pair in heawood_pairs:
        verdict = check_disjoint_pair_configuration(heawood_graph, pair)
        assert verdict.passed, verdict.witness
        assert heawood_graph.has_edge(verdict.witness["v"], verdict.witness["w"])
        assert sorted(verdict.witness["frame"]) == list(range(1, 15))


def test_two_hexagons_with_loose_vertices_fail():
    edges = [(i, i % 6 + 1) for i in range(1, 7)] + [(6 + i, 6 + i % 6 + 1) for i in range(1, 7)]
    edges += [(13, 1), (13, 7), (14, 4), (14, 10)]
    g = Graph.from_edges(edges)
    pair = DisjointPair.canonical(Cycle.canonical(range(1, 7)), Cycle.canonical(range(7, 13)))
    verdict = check_disjoint_pair_configuration(g, pair)
    assert not verdict.passed
    assert verdict.witness["reason"] == "the off-pair vertices are not adjacent"


# ----------------------------------------------------------------------------
# automorphisms from labelings
# ----------------------------------------------------------------------------

def test_hamiltonian_labelings_induce_automorphisms(heawood_graph, heawood_cycles):
    verdicts = [check_hamiltonian_chord_pattern(heawood_graph, c) for c in heawood_cycles[14]]
    images = {labeling_automorphism(heawood_graph, verdicts[0], v) for v in verdicts}
    assert None not in images
    assert len(images) == 24


def test_complement_labelings_induce_automorphisms(heawood_graph, complement_verdicts):
    images = {labeling_automorphism(heawood_graph, complement_verdicts[0], v) for v in complement_verdicts}
    assert None not in images
    assert len(images) == 56


def test_pair_labelings_induce_automorphisms(heawood_graph, heawood_pairs):
    verdicts = [check_disjoint_pair_configuration(heawood_graph, p) for p in heawood_pairs]
    images = {labeling_automorphism(heawood_graph, verdicts[0], v) for v in verdicts}
    assert None not in images
    assert len(images) == 42


def test_labeling_automorphism_rejects_mixed_lemmas(heawood_graph, heawood_cycles, complement_verdicts):
    chord = check_hamiltonian_chord_pattern(heawood_graph, heawood_cycles[14][0])
    with pytest.raises(InputError):
        labeling_automorphism(heawood_graph, chord, complement_verdicts[0])


# ----------------------------------------------------------------------------
# certification
# ----------------------------------------------------------------------------

def test_reference_comparison_marks_ten_cycles_informational():
    rows = {row["length"]: row for row in compare_with_reference({6: 28, 8: 21, 10: 84, 12: 56, 14: 24})}
    assert rows[10]["informational"]
    assert not rows[10]["match"]
    assert all(rows[k]["match"] for k in (6, 8, 12, 14))


def test_heawood_certifies(heawood_report):
    assert heawood_report.passed, heawood_report.first_failure
    assert heawood_report.first_failure is None
    assert [c.name for c in heawood_report.checks] == CHECK_NAMES
    assert heawood_report.methods_agree
    assert heawood_report.census_dfs == {6: 28, 8: 21, 10: 84, 12: 56, 14: 24}
    assert heawood_report.disjoint_pair_count == 42
    assert heawood_report.aut_order == 336
    assert heawood_report.pgl2_isomorphic
    assert [t["stabilizer_orders"] for t in heawood_report.transitivity] == [[14], [6], [8]]
    summary = heawood_report.lemma_summary()
    assert summary[CHORDS] == {"instances": 24, "passed": 24}
    assert summary[COMPLEMENT] == {"instances": 56, "passed": 56}
    assert summary[DISTANCE3] == {"instances": 28, "passed": 28}
    assert summary[PAIRCONFIG] == {"instances": 42, "passed": 42}


def test_certification_is_deterministic(heawood_graph, heawood_report):
    again = certify_heawood(heawood_graph, threads=4)
    assert again.to_dict() == heawood_report.to_dict()
    assert "elapsed_ms" not in again.to_dict()
    assert set(again.to_dict(include_timings=True)["elapsed_ms"]) == {
        "structure", "census_dfs", "census_zeon", "disjoint_pairs", "automorphisms", "pgl2", "orbits", "lemmas",
    }


def test_shifted_labels_still_certify(heawood_graph):
    shifted = heawood_graph.relabeled({v: v + 100 for v in heawood_graph.labels})
    assert certify_heawood(shifted).passed


def test_mutant_fails_at_girth(heawood_graph):
    mutant = swap_edges(heawood_graph, remove={(1, 6)}, add=[(1, 8)])
    report = certify_heawood(mutant)
    assert not report.passed
    assert report.first_failure == "girth"
    assert len(report.checks) == len(CHECK_NAMES)


def test_random_cubic_like_graph_gets_a_full_report():
    rng = random.Random(97)
    ring = [(i, i % 14 + 1) for i in range(1, 15)]
    others = [(u, v) for u in range(1, 15) for v in range(u + 1, 15) if (u, v) not in ring and (v - u) != 13]
    g = Graph.from_edges(ring + rng.sample(others, 7))
    assert g.edge_count == 21
    report = certify_heawood(g)
    assert len(report.checks) == len(CHECK_NAMES)
    assert report.passed == (find_isomorphism(g, heawood()) is not None)


def test_large_automorphism_group_still_yields_a_report(clique_union):
    report = certify_heawood(clique_union)
    assert [c.name for c in report.checks] == CHECK_NAMES
    assert report.first_failure == "girth"
    assert report.aut_order == 28800
    assert report.pgl2_isomorphic is False
    pgl = next(c for c in report.checks if c.name == "isomorphic to PGL(2, 7)")
    assert not pgl.passed
    assert pgl.detail == "not isomorphic"


def test_pair_orientation_with_x2_next_to_y6_is_reflected(heawood_graph, heawood_pairs):
    for pair in heawood_pairs:
        verdict = check_disjoint_pair_configuration(heawood_graph, pair)
        x, y = verdict.witness["x"], verdict.witness["y"]
        # y1 and y4 stay put; the other four swap sides
        flipped = [y[0]] + y[:0:-1]
        assert (flipped[0], flipped[3]) == (y[0], y[3])
        assert heawood_graph.has_edge(x[1], flipped[5])
        assert heawood_graph.has_edge(x[2], flipped[2])
        assert not heawood_graph.has_edge(x[1], flipped[1])
        assert verdict.passed
        assert flipped != y
