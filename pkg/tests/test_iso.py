"""
Graf ve ortam izomorfizması testleri.
"""

import pytest
from hypothesis import given, settings as hsettings, strategies as st

from core.errors import BudgetExceededError, PreconditionError
from core.token_system import without_token
from convert.bijection import adjacency_graph
from graphs.fixtures import cycle_graph, fixture_medium, hypercube_graph, hypercube_medium, path_graph, star_graph
from graphs.graph import like_related
from iso.isomorphism import (
    GraphIso,
    find_graph_iso,
    lift_to_media_iso,
    media_isomorphic,
    relabel_graph,
    relabel_medium,
    token_image,
)
from utils.config import MediaKitSettings


class TestGraphIso:
    def test_identical_graphs(self, c6):
        found = find_graph_iso(c6, cycle_graph(6))
        assert found.phi == {v: v for v in c6.vertices}

    def test_relabelled_cycle(self, c6):
        mapping = {str(i): f"v{(i * 5) % 6}" for i in range(6)}
        found = find_graph_iso(c6, relabel_graph(c6, mapping))
        image = relabel_graph(c6, found.phi)
        assert image == relabel_graph(c6, mapping)

    def test_different_edge_counts(self):
        assert find_graph_iso(cycle_graph(8), hypercube_graph(3)) is None

    def test_same_degree_sequence_not_isomorphic(self):
        # C6 ile iki ayrık üçgen: aynı derece dizisi
        from graphs.graph import Graph
        triangles = Graph([str(i) for i in range(6)],
                          [("0", "1"), ("1", "2"), ("0", "2"), ("3", "4"), ("4", "5"), ("3", "5")])
        assert find_graph_iso(cycle_graph(6), triangles) is None

    def test_path_vs_star(self):
        assert find_graph_iso(path_graph(4), star_graph(3)) is None

    def test_vertex_cap(self):
        with pytest.raises(BudgetExceededError):
            find_graph_iso(hypercube_graph(4), hypercube_graph(4), MediaKitSettings(max_iso_vertices=12))


class TestMediaIso:
    def test_lift_checks_equation(self, q3):
        token_map = {t: f"x_{t}" for t in q3.token_ids}
        state_map = {s: f"s{i}" for i, s in enumerate(q3.states)}
        other = relabel_medium(q3, state_map, token_map)
        found = media_isomorphic(q3, other)
        for token in q3.tokens.values():
            image = other.token(found.beta[token.id])
            for state in q3.states:
                assert found.alpha[token.apply(state)] == image.apply(found.alpha[state])

    def test_token_image_independent_of_chosen_move(self, q3):
        phi = find_graph_iso(adjacency_graph(q3), adjacency_graph(q3))
        for token in q3.tokens.values():
            images = {token_image(phi, q3, s, v) for s, v in token.moves}
            assert len(images) == 1

    def test_not_isomorphic(self):
        assert media_isomorphic(hypercube_medium(3), fixture_medium("c8")) is None

    def test_requires_media(self, q3):
        with pytest.raises(PreconditionError):
            media_isomorphic(q3, without_token(q3, "add1"))

    def test_lift_rejects_non_isomorphism(self, q3):
        bogus = GraphIso(phi={s: s for s in q3.states} | {"{}": "{1}", "{1}": "{}"})
        with pytest.raises(PreconditionError):
            lift_to_media_iso(bogus, q3, q3)

    @hsettings(max_examples=10, deadline=None)
    @given(st.permutations(list(range(8))))
    def test_random_relabelings(self, order):
        q3 = hypercube_medium(3)
        state_map = {s: f"p{order[i]}" for i, s in enumerate(q3.states)}
        relabelled = relabel_medium(q3, state_map)
        found = media_isomorphic(q3, relabelled)
        assert found is not None
        assert sorted(found.beta.values()) == sorted(relabelled.token_ids)

    @pytest.mark.parametrize("name", ["q3", "c6"])
    def test_state_map_is_graph_isomorphism(self, name):
        medium = fixture_medium(name)
        state_map = {s: f"r{i}" for i, s in enumerate(reversed(medium.states))}
        other = relabel_medium(medium, state_map)
        found = media_isomorphic(medium, other)
        assert relabel_graph(adjacency_graph(medium), found.alpha) == adjacency_graph(other)


class TestLikePreservation:
    @pytest.mark.parametrize("name", ["q3", "c6"])
    def test_phi_preserves_like_relation(self, name):
        graph = adjacency_graph(fixture_medium(name))
        mapping = {v: f"w{i}" for i, v in enumerate(reversed(graph.vertices))}
        image = relabel_graph(graph, mapping)
        phi = find_graph_iso(graph, image).phi
        arcs = list(graph.arcs())
        for a in arcs:
            for b in arcs:
                mapped_a = (phi[a.source], phi[a.target])
                mapped_b = (phi[b.source], phi[b.target])
                assert like_related(graph, a, b) == like_related(image, mapped_a, mapped_b)
