"""
Ortam aksiyomları, durum içerikleri ve devre teoremleri testleri.
"""

from itertools import product

import pytest

from core.errors import InputError, InternalContradictionError, PreconditionError
from core.token_system import Token, TokenSystem, content, reverse_message, split_token, without_token
from convert.bijection import concise_message
from graphs.fixtures import MEDIATIC_FIXTURES, fixture_medium, hypercube_medium
from medium import axioms
from medium.axioms import check_axioms_bounded, check_medium, is_medium, missing_reverse
from medium.theorems import (
    ThetaConfig,
    check_opposite,
    check_theta,
    classify_circuit,
    content_family,
    enumerate_theta_configs,
    hypercube_embedding,
    state_content,
)
from utils.config import MediaKitSettings


def _ambiguous_k2() -> TokenSystem:
    return TokenSystem(["0", "1"], [
        Token("up", frozenset({("0", "1")})),
        Token("down", frozenset({("1", "0")})),
        Token("down2", frozenset({("1", "0")})),
    ])


class TestCheckMedium:
    @pytest.mark.parametrize("name", ["k2", "p3", "k13", "c4", "c6", "q3", "domino", "tree15"])
    def test_fixture_media(self, name):
        report = check_medium(fixture_medium(name))
        assert report.is_medium
        assert all([report.axiom_ma, report.axiom_mb, report.m1, report.m2, report.m3, report.m4])
        assert report.method == "graph"

    def test_missing_reverse_fails_step_one(self, q3):
        broken = without_token(q3, "add1")
        report = check_medium(broken)
        assert not report.is_medium
        assert report.failed_step == 1
        assert not report.m1 and report.m1_witness == "remove1"
        assert not report.axiom_ma
        assert report.ma_witness == ["{2,3}", "{1,2,3}"]

    def test_ambiguous_reverse(self):
        system = _ambiguous_k2()
        assert missing_reverse(system) == "up"
        report = check_medium(system)
        assert not report.is_medium and not report.m1

    def test_split_token_fails_token_match(self, q3):
        report = check_medium(split_token(q3, "add1"))
        assert not report.is_medium
        assert report.failed_step == 4
        assert report.mediatic.is_mediatic
        assert not report.axiom_mb
        witness = report.mb_witness
        assert split_token(q3, "add1").apply(witness.start, witness.message) == witness.start

    def test_non_mediatic_graph_fails_step_three(self):
        # K23 üzerinde her kenar için iki yönlü tek taşımalı tokenlar
        edges = [(a, b) for a in ("a1", "a2") for b in ("b1", "b2", "b3")]
        tokens = []
        for a, b in edges:
            tokens.append(Token(f"{a}{b}", frozenset({(a, b)})))
            tokens.append(Token(f"{b}{a}", frozenset({(b, a)})))
        system = TokenSystem(["a1", "a2", "b1", "b2", "b3"], tokens)
        report = check_medium(system)
        assert not report.is_medium
        assert report.failed_step == 3
        assert report.mediatic.g3 is False

    def test_report_payload(self, q3):
        payload = check_medium(q3).to_payload()
        assert payload["isMedium"] is True
        assert payload["axiomMa"] is True and payload["m4"] is True

    def test_is_medium_shortcut(self, q3):
        assert is_medium(q3)
        assert not is_medium(without_token(q3, "remove2"))


@pytest.fixture
def unwitnessed_axioms(monkeypatch):
    """[M1]-[M4] bayrakları tanıksız doğru görünür; basit olmayan sayım hiçbir şey bulmaz."""
    real_flags = axioms._flags_from_tally

    def flags_without_violations(system, tally, max_len):
        flags = real_flags(system, tally, max_len)
        for key in ("m1", "m2", "m3", "m4"):
            flags[key], flags[f"{key}_witness"] = True, None
        return flags

    class SimpleOnlyExplorer(axioms.MessageExplorer):
        def run(self):
            return super().run() if self.simple else axioms._AxiomTally()

    monkeypatch.setattr(axioms, "_flags_from_tally", flags_without_violations)
    monkeypatch.setattr(axioms, "MessageExplorer", SimpleOnlyExplorer)


class TestAxiomReconciliation:
    def test_divergence_without_witness_raises(self, unwitnessed_axioms, c4_medium):
        with pytest.raises(InternalContradictionError) as exc:
            check_medium(split_token(c4_medium, "t0"), MediaKitSettings())
        assert exc.value.details["axiom_mb"] is False
        assert exc.value.details["m4"] is True

    def test_capped_search_leaves_flags_as_computed(self, unwitnessed_axioms, c4_medium):
        report = check_medium(split_token(c4_medium, "t0"), MediaKitSettings(max_len_cap=4))
        assert not report.is_medium
        assert report.m4 and report.m4_witness is None
        assert any("MEDIA_KIT_MAX_LEN_CAP" in note for note in report.notes)

    def test_bounded_records_divergence(self, unwitnessed_axioms, c4_medium):
        report = check_axioms_bounded(split_token(c4_medium, "t0"), 8, MediaKitSettings())
        assert not report.is_medium
        assert all([report.m1, report.m2, report.m3, report.m4])
        assert report.notes

    @pytest.mark.parametrize("mutate", [without_token, split_token])
    def test_failed_flags_carry_witnesses(self, c4_medium, mutate):
        report = check_medium(mutate(c4_medium, "t0"), MediaKitSettings())
        for key in ("m1", "m2", "m3", "m4"):
            if not getattr(report, key):
                assert getattr(report, f"{key}_witness") is not None
        assert not report.notes


class TestMediumTokens:
    @pytest.mark.parametrize("name", MEDIATIC_FIXTURES)
    def test_no_token_is_one_to_one(self, name):
        medium = fixture_medium(name)
        for token_id in medium.token_ids:
            images = {medium.apply(state, [token_id]) for state in medium.states}
            assert len(images) < len(medium.states)


class TestBoundedAxioms:
    @pytest.mark.parametrize("name", ["k2", "c4", "c6", "q3"])
    def test_agrees_with_graph_route_on_media(self, name):
        medium = fixture_medium(name)
        report = check_axioms_bounded(medium, 2 * len(medium.states))
        assert report.is_medium
        assert report.method == "bounded"
        assert report.max_len == 2 * len(medium.states)

    def test_max_len_too_small(self, q3):
        with pytest.raises(InputError):
            check_axioms_bounded(q3, 1)

    def test_detects_missing_reverse(self, k2):
        broken = without_token(k2, "t10")
        report = check_axioms_bounded(broken, 4)
        assert not report.is_medium
        assert not report.axiom_ma and not report.m1


class TestStateContent:
    def test_empty_set(self, q3):
        assert state_content(q3, "{}").tokens == ["remove1", "remove2", "remove3"]

    def test_full_set(self, q3):
        assert state_content(q3, "{1,2,3}").tokens == ["add1", "add2", "add3"]

    def test_mixed(self, q3):
        assert state_content(q3, "{1,2}").tokens == ["add1", "add2", "remove3"]

    def test_requires_medium(self, q3):
        with pytest.raises(PreconditionError):
            state_content(without_token(q3, "add1"), "{}")

    def test_unknown_state(self, q3):
        with pytest.raises(InputError):
            state_content(q3, "{4}")

    def test_matches_enumeration_oracle(self, c6_medium):
        # Ŝ: S'yi üreten bir özlü mesajda geçen tokenlar
        for state in c6_medium.states:
            oracle = set()
            for other in c6_medium.states:
                if other != state:
                    oracle |= content(concise_message(c6_medium, other, state))
            assert state_content(c6_medium, state).tokens == sorted(oracle)


class TestHypercubeEmbedding:
    def test_q3_coordinates(self, q3):
        embedding = hypercube_embedding(q3)
        assert embedding.dimension == 3
        assert embedding.token_classes == [("add1", "remove1"), ("add2", "remove2"), ("add3", "remove3")]
        assert embedding.coordinates["{}"] == "000"
        assert embedding.coordinates["{1,2}"] == "110"
        assert embedding.coordinates["{1,2,3}"] == "111"

    def test_contents_match_state_content(self, c6_medium):
        family = content_family(c6_medium)
        for state in c6_medium.states:
            assert family[state] == state_content(c6_medium, state).tokens

    def test_contents_are_distinct(self, c6_medium):
        family = content_family(c6_medium)
        assert len({tuple(tokens) for tokens in family.values()}) == len(c6_medium.states)

    def test_payload_aliases(self, c6_medium):
        payload = hypercube_embedding(c6_medium).to_payload()
        assert payload["dimension"] == 3
        assert {"tokenClasses", "coordinates", "wellgraded", "isometric"} <= set(payload)

    def test_requires_medium(self, q3):
        with pytest.raises(PreconditionError):
            hypercube_embedding(split_token(q3, "add1"))


class TestCircuits:
    def test_square_is_regular(self, q3):
        result = classify_circuit(q3, "{}", ["add1", "add2", "remove1", "remove2"])
        assert result.is_return and result.is_orderly and result.is_regular
        assert result.split_witness == 2
        assert result.opposite_pairs == [(0, 2), (1, 3)]

    def test_length_two_return_is_not_orderly(self, q3):
        result = classify_circuit(q3, "{}", ["add1", "remove1"])
        assert result.is_return and not result.is_orderly and not result.is_regular

    def test_identical_halves_allowed_on_request(self, q3):
        result = classify_circuit(q3, "{}", ["add1", "remove1"], allow_identical_halves=True)
        assert result.is_orderly

    def test_not_a_return(self, q3):
        result = classify_circuit(q3, "{}", ["add1", "add2"])
        assert not result.is_return and not result.is_orderly

    def test_not_stepwise_effective(self, q3):
        with pytest.raises(PreconditionError):
            classify_circuit(q3, "{}", ["remove1", "add1"])

    def test_orderly_but_not_regular(self, q3):
        message = ["add1", "add2", "add3", "remove2", "remove1", "remove3"]
        result = classify_circuit(q3, "{}", message)
        assert result.is_orderly and not result.is_regular
        opposite = check_opposite(q3, "{}", message)
        assert not opposite.opposite_mutual_reverses
        assert not opposite.regular
        assert not opposite.all_rotations_orderly

    def test_regular_hexagon(self, q3):
        message = ["add1", "add2", "add3", "remove1", "remove2", "remove3"]
        opposite = check_opposite(q3, "{}", message)
        assert opposite.opposite_mutual_reverses and opposite.regular and opposite.all_rotations_orderly

    def test_opposite_requires_orderly_return(self, q3):
        with pytest.raises(PreconditionError):
            check_opposite(q3, "{}", ["add1", "remove1"])


class TestTheta:
    def test_all_conditions_true(self, q3):
        cfg = ThetaConfig(S="{}", N="{1}", Q="{2,3}", W="{1,2,3}", tau="remove1", mu="remove1",
                          q=["add2", "add3"], q_prime=["remove1", "add2", "add3"],
                          w=["add2", "add3"], w_prime=["add1", "add2", "add3"])
        result = check_theta(q3, cfg)
        assert result.cond_i and result.cond_ii and result.cond_iii and result.cond_iv
        assert result.orderly_witness == ["add2", "add3", "add1", "remove3", "remove2", "remove1"]
        witness = result.orderly_witness
        assert q3.apply("{}", witness) == "{}"
        assert classify_circuit(q3, "{}", witness).is_orderly

    def test_converse_fails(self, q3):
        cfg = ThetaConfig(S="{}", N="{2}", Q="{1,2}", W="{1,2,3}", tau="remove2", mu="remove3",
                          q=["add1", "add2"], q_prime=["add1"],
                          w=["add3", "add1"], w_prime=["add1", "add2", "add3"])
        result = check_theta(q3, cfg)
        assert not any([result.cond_i, result.cond_ii, result.cond_iii, result.cond_iv])
        assert result.orderly_witness is None
        assert result.candidate_is_orderly

    def test_hypotheses_checked(self, q3):
        cfg = ThetaConfig(S="{}", N="{1}", Q="{2,3}", W="{1,2,3}", tau="add1", mu="remove1",
                          q=["add2", "add3"], q_prime=["remove1", "add2", "add3"],
                          w=["add2", "add3"], w_prime=["add1", "add2", "add3"])
        with pytest.raises(PreconditionError):
            check_theta(q3, cfg)

    def test_config_aliases(self):
        cfg = ThetaConfig(S="a", N="b", Q="c", W="d", tau="t", mu="m",
                          q=["x"], q_prime=["y"], w=["z"], w_prime=["u"])
        payload = cfg.to_payload()
        assert payload["S"] == "a" and payload["qPrime"] == ["y"]

    def test_enumerated_configs_are_consistent(self, c4_medium):
        configs = enumerate_theta_configs(c4_medium)
        assert configs
        for cfg in configs:
            check_theta(c4_medium, cfg)


def test_reverse_of_concise_message_is_concise():
    q3 = hypercube_medium(3)
    for s, t in product(q3.states, repeat=2):
        if s != t:
            message = concise_message(q3, s, t)
            assert q3.apply(t, reverse_message(q3, message)) == s
