"""
Ortam ile mediatik graf arasındaki dönüşüm testleri.
"""

import networkx as nx
import pytest

from core.errors import InputError, PreconditionError
from core.token_system import Token, TokenSystem, is_concise, split_token, without_token
from convert.bijection import (
    adjacency_graph,
    concise_message,
    graph_to_medium,
    medium_to_graph,
    path_to_message,
    shortest_path,
)
from convert.round_trip import verify_round_trip
from graphs.fixtures import MEDIATIC_FIXTURES, cycle_graph, fixture_graph, fixture_medium, k23
from graphs.graph import distances


class TestGraphToMedium:
    def test_c4_tokens(self):
        medium = graph_to_medium(cycle_graph(4))
        assert medium.token_ids == ("t0", "t1", "t2", "t3")
        assert medium.tokens["t0"].moves == frozenset({("0", "1"), ("3", "2")})
        assert medium.reverse_id("t0") == "t2"

    def test_non_mediatic_graph_rejected_with_report(self):
        with pytest.raises(PreconditionError) as exc:
            graph_to_medium(k23())
        assert exc.value.details["g3"] is False

    def test_k2(self):
        medium = graph_to_medium(fixture_graph("k2"))
        assert len(medium.tokens) == 2


class TestMediumToGraph:
    def test_q3_graph(self, q3):
        graph = medium_to_graph(q3)
        assert len(graph.vertices) == 8
        assert len(graph.edges) == 12

    def test_non_medium_rejected(self, q3):
        broken = without_token(q3, "add1")
        with pytest.raises(PreconditionError) as exc:
            medium_to_graph(broken)
        assert exc.value.details["isMedium"] is False

    def test_non_medium_allowed_for_diagnostics(self, q3):
        broken = without_token(q3, "add1")
        assert medium_to_graph(broken, allow_non_medium=True) == adjacency_graph(q3)


class TestRoundTrip:
    @pytest.mark.parametrize("name", MEDIATIC_FIXTURES)
    def test_graph_round_trip_is_exact(self, name):
        graph = fixture_graph(name)
        assert medium_to_graph(graph_to_medium(graph)) == graph
        assert verify_round_trip(graph).ok

    @pytest.mark.parametrize("name", ["k2", "q3", "c6", "domino"])
    def test_medium_round_trip_up_to_token_bijection(self, name):
        medium = fixture_medium(name)
        report = verify_round_trip(medium)
        assert report.ok
        assert sorted(report.token_bijection) == sorted(medium.token_ids)
        assert len(set(report.token_bijection.values())) == len(medium.tokens)

    def test_round_trip_rejects_non_medium(self, q3):
        with pytest.raises(PreconditionError):
            verify_round_trip(split_token(q3, "add1"))


class TestShortestPaths:
    def test_lexicographic_bfs(self, c6):
        assert shortest_path(c6, "0", "3") == ["0", "1", "2", "3"]

    def test_unreachable(self):
        assert shortest_path(fixture_graph("two-components"), "0", "2") is None

    def test_concise_message_q3(self, q3):
        assert concise_message(q3, "{}", "{1,2}") == ("add1", "add2")

    def test_concise_message_same_state(self, q3):
        with pytest.raises(InputError):
            concise_message(q3, "{}", "{}")

    def test_concise_message_requires_medium(self):
        system = TokenSystem(["0", "1"], [Token("up", frozenset({("0", "1")}))])
        with pytest.raises(PreconditionError):
            concise_message(system, "0", "1")

    def test_path_to_message_rejects_non_adjacent(self, q3):
        with pytest.raises(InputError):
            path_to_message(q3, ["{}", "{1,2}"])

    @pytest.mark.parametrize("name", ["k2", "p6", "k13", "c6", "c8", "q3", "q4", "domino", "tree15",
                                      "random-partial-cube"])
    def test_concise_length_is_distance(self, name):
        medium = fixture_medium(name)
        table = distances(adjacency_graph(medium))
        for s in medium.states:
            for t in medium.states:
                if s == t:
                    continue
                message = concise_message(medium, s, t)
                assert len(message) == table.d(s, t)
                assert medium.apply(s, message) == t
                assert is_concise(medium, s, message)

    @pytest.mark.parametrize("name", ["c6", "q3", "q4", "domino", "random-partial-cube"])
    def test_every_shortest_path_lifts_to_concise_message(self, name):
        medium = fixture_medium(name)
        nx_graph = adjacency_graph(medium).to_networkx()
        for s in medium.states:
            for t in medium.states:
                if s == t:
                    continue
                for path in nx.all_shortest_paths(nx_graph, s, t):
                    assert is_concise(medium, s, path_to_message(medium, path))
