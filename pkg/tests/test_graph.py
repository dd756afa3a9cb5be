from __future__ import annotations

import json

import pytest

from chordgroups.classify import SeventhFamily, seventh_table
from chordgroups.graph import (
    Operator,
    build_chord_graph,
    component_isomorphism,
    connected_components,
    export_dot,
    export_json,
)
from chordgroups.transform import augdim, dual, invert

from conftest import SEVENTH_ROWS


@pytest.fixture(scope="module")
def graph():
    return build_chord_graph(include_dd=False)


@pytest.fixture(scope="module")
def graph_with_dd():
    return build_chord_graph(include_dd=True)


def _edges(graph, op):
    return [e for e in graph.edges if e.op is op]


class TestBuild:
    def test_node_counts(self, graph, graph_with_dd):
        assert len(graph.nodes) == 24
        assert len(graph_with_dd.nodes) == 25

    def test_every_node_is_a_labeled_harmonic_tetrad(self, graph_with_dd):
        table = seventh_table()
        assert {n.chord for n in graph_with_dd.nodes} == set(table)
        for node in graph_with_dd.nodes:
            assert node.label == table[node.chord]

    def test_edge_semantics(self, graph):
        by_id = {n.id: n for n in graph.nodes}
        for edge in graph.edges:
            source, target = by_id[edge.source], by_id[edge.target]
            if edge.op is Operator.INVERSION:
                assert edge.directed
                assert invert(source.chord) == target.chord
            else:
                assert not edge.directed
                fn = dual if edge.op is Operator.DUALITY else augdim
                assert fn(source.chord) == target.chord
                assert fn(target.chord) == source.chord

    def test_edge_counts(self, graph):
        # independent recount: involution edges pair up the non-fixed nodes
        chords = [n.chord for n in graph.nodes]
        a_fixed = sum(1 for c in chords if augdim(c) == c)
        d_fixed = sum(1 for c in chords if dual(c) == c)
        assert len(_edges(graph, Operator.INVERSION)) == 24
        assert len(_edges(graph, Operator.DUALITY)) == (24 - d_fixed) // 2 + d_fixed == 12
        assert len(_edges(graph, Operator.AUGDIM)) == (24 - a_fixed) // 2 + a_fixed == 14

    def test_degree_regularity(self, graph_with_dd):
        for node in graph_with_dd.nodes:
            assert (
                sum(1 for e in _edges(graph_with_dd, Operator.INVERSION) if e.source == node.id)
                == 1
            )
            for op in (Operator.DUALITY, Operator.AUGDIM):
                incident = [
                    e for e in _edges(graph_with_dd, op) if node.id in (e.source, e.target)
                ]
                assert len(incident) == 1

    def test_a_self_loops(self, graph):
        loops = {e.source for e in _edges(graph, Operator.AUGDIM) if e.source == e.target}
        assert loops == {"mM0", "AM3", "Mm0", "dm3"}

    def test_no_duality_self_loops_without_dd(self, graph):
        assert all(e.source != e.target for e in _edges(graph, Operator.DUALITY))

    def test_dd_is_fixed_by_all_three_operators(self, graph_with_dd):
        dd_edges = [
            e for e in graph_with_dd.edges if "dd0" in (e.source, e.target)
        ]
        assert len(dd_edges) == 3
        assert all(e.source == e.target == "dd0" for e in dd_edges)

    def test_inversion_edges_cycle_through_each_family_row(self, graph):
        successor = {
            e.source: e.target for e in _edges(graph, Operator.INVERSION)
        }
        for family, row in SEVENTH_ROWS.items():
            if family == "dd":
                continue
            for n in range(len(row)):
                assert successor[f"{family}{n}"] == f"{family}{(n + 1) % len(row)}"


class TestComponents:
    def test_two_twelve_node_components(self, graph):
        sizes = [len(c) for c in connected_components(graph)]
        assert sizes == [12, 12]

    def test_dd_forms_its_own_component(self, graph_with_dd):
        components = connected_components(graph_with_dd)
        assert [len(c) for c in components] == [12, 12, 1]
        assert components[-1][0].id == "dd0"

    def test_upper_component_families(self, graph):
        upper, lower = connected_components(graph)
        assert {n.label.family for n in upper} == {
            SeventhFamily.MM,
            SeventhFamily.mM,
            SeventhFamily.AM,
        }
        assert {n.label.family for n in lower} == {
            SeventhFamily.Mm,
            SeventhFamily.dm,
            SeventhFamily.mm,
        }

    def test_components_split_by_partition_class(self, graph):
        from chordgroups.core import chord_to_partition

        upper, lower = connected_components(graph)
        assert {chord_to_partition(n.chord) for n in upper} == {(1, 3, 4, 4)}
        assert {chord_to_partition(n.chord) for n in lower} == {(2, 3, 3, 4)}


class TestIsomorphism:
    def test_label_map(self, graph):
        mapping = component_isomorphism(graph)
        assert len(mapping) == 12
        assert mapping["MM0"] == "mm0"
        assert mapping["mM2"] == "Mm2"
        assert mapping["AM3"] == "dm3"

    def test_checks_pass_with_dd_present(self, graph_with_dd):
        assert component_isomorphism(graph_with_dd)["MM0"] == "mm0"

    def test_example_edges_map_across_components(self, graph):
        # a sends MM0 to AM0 upstairs and its partner mm0 to dm0 downstairs
        assert augdim((0, 4, 7, 11)) == (0, 4, 8, 11)
        assert augdim((0, 3, 7, 10)) == (0, 3, 6, 10)
        # d sends mM0 to AM3 upstairs and its partner Mm0 to dm3 downstairs
        assert dual((0, 3, 7, 11)) == (0, 1, 5, 9)
        assert dual((0, 4, 7, 10)) == (0, 2, 5, 8)


class TestDotExport:
    def test_starts_with_digraph(self, graph):
        assert export_dot(graph).startswith("digraph")

    def test_contains_directed_inversion_edge(self, graph):
        assert 'MM0 -> MM1 [label="i"]' in export_dot(graph)

    def test_contains_dashed_a_self_loop(self, graph):
        assert 'mM0 -> mM0 [label="a", dir=both, style=dashed]' in export_dot(graph)

    def test_duality_edges_are_bidirectional_solid(self, graph):
        dot = export_dot(graph)
        assert '[label="d", dir=both]' in dot
        assert '[label="d", dir=both, style=dashed]' not in dot

    def test_declares_24_nodes(self, graph):
        node_lines = [
            line
            for line in export_dot(graph).splitlines()
            if line.startswith("  ") and "->" not in line
        ]
        assert len(node_lines) == 24

    def test_deterministic(self, graph):
        assert export_dot(graph) == export_dot(build_chord_graph(include_dd=False))


class TestJsonExport:
    def test_round_trips_as_json(self, graph):
        document = json.loads(export_json(graph))
        assert set(document) == {"nodes", "edges"}
        assert len(document["nodes"]) == 24

    def test_dd_node_entry(self, graph_with_dd):
        document = json.loads(export_json(graph_with_dd))
        assert {
            "id": "dd0",
            "chord": [0, 3, 6, 9],
            "family": "dd",
            "inversion": 0,
        } in document["nodes"]

    def test_known_a_edge(self, graph):
        document = json.loads(export_json(graph))
        assert {"from": "dm1", "to": "Mm2", "op": "a"} in document["edges"]

    def test_edge_counts_by_operator(self, graph):
        document = json.loads(export_json(graph))
        counts = {"i": 0, "d": 0, "a": 0}
        for edge in document["edges"]:
            counts[edge["op"]] += 1
        assert counts == {"i": 24, "d": 12, "a": 14}

    def test_deterministic(self, graph):
        assert export_json(graph) == export_json(build_chord_graph(include_dd=False))
