"""
Token sistemi ve mesaj cebiri testleri.
"""

import pytest
from hypothesis import given, settings as hsettings, strategies as st

from core.errors import InputError, MalformedSystemError
from core.token_system import (
    Token,
    TokenSystem,
    apply,
    as_message,
    content,
    is_concise,
    is_consistent,
    is_stepwise_effective,
    is_vacuous,
    jointly_consistent,
    length,
    message_stats,
    reverse_message,
    reverse_of,
    split_token,
    without_token,
)
from graphs.fixtures import fixture_medium, hypercube_medium

Q3_TOKENS = ["add1", "add2", "add3", "remove1", "remove2", "remove3"]


class TestTokenValidation:
    def test_empty_moves_rejected(self):
        with pytest.raises(InputError):
            Token("t", frozenset())

    def test_loop_move_rejected(self):
        with pytest.raises(InputError):
            Token("t", frozenset({("a", "a")}))

    def test_two_targets_for_one_source_rejected(self):
        with pytest.raises(InputError):
            Token("t", frozenset({("a", "b"), ("a", "c")}))

    def test_apply_fixes_states_outside_moves(self):
        token = Token("t", frozenset({("a", "b")}))
        assert token.apply("a") == "b"
        assert token.apply("b") == "b"


class TestTokenSystemValidation:
    def test_single_state_rejected(self):
        with pytest.raises(InputError):
            TokenSystem(["a"], [Token("t", frozenset({("a", "a2")}))])

    def test_unknown_state_in_move(self):
        with pytest.raises(InputError) as exc:
            TokenSystem(["a", "b"], [Token("t", frozenset({("a", "c")}))])
        assert "tokens[t]" in exc.value.details["field"]

    def test_duplicate_token_id(self):
        t = Token("t", frozenset({("a", "b")}))
        with pytest.raises(InputError):
            TokenSystem(["a", "b"], [t, t])

    def test_explicit_reverse_pairing_is_verified(self):
        up = Token("up", frozenset({("0", "1")}))
        down = Token("down", frozenset({("1", "0")}))
        other = Token("other", frozenset({("0", "1")}))
        TokenSystem(["0", "1"], [up, down], {"up": "down", "down": "up"})
        with pytest.raises(MalformedSystemError):
            TokenSystem(["0", "1"], [up, down, other], {"up": "other", "other": "up"})

    def test_from_dict_names_offending_field(self):
        with pytest.raises(InputError) as exc:
            TokenSystem.from_dict({"states": ["0", "1"], "tokens": [{"id": "t", "moves": [["0"]]}]})
        assert exc.value.details["field"] == "tokens[0].moves"

    def test_from_dict_missing_states(self):
        with pytest.raises(InputError) as exc:
            TokenSystem.from_dict({"tokens": []})
        assert exc.value.details["field"] == "states"

    def test_dict_round_trip(self, q3):
        again = TokenSystem.from_dict(q3.to_dict())
        assert again.states == q3.states
        assert again.to_dict() == q3.to_dict()


class TestReverses:
    def test_hypercube_reverses(self, q3):
        assert q3.reverse_id("add1") == "remove1"
        assert reverse_of(q3, "remove2").id == "add2"

    def test_ambiguous_reverse_raises(self):
        system = TokenSystem(["0", "1"], [
            Token("up", frozenset({("0", "1")})),
            Token("down", frozenset({("1", "0")})),
            Token("down2", frozenset({("1", "0")})),
        ])
        with pytest.raises(MalformedSystemError):
            system.reverse_id("up")
        assert system.reverse_candidates("up") == ("down", "down2")

    def test_missing_reverse(self):
        system = TokenSystem(["0", "1"], [Token("up", frozenset({("0", "1")}))])
        assert reverse_of(system, "up") is None
        with pytest.raises(MalformedSystemError):
            reverse_message(system, ["up"])

    def test_reverse_message(self, q3):
        assert reverse_message(q3, ["add1", "add2", "remove3"]) == ("add3", "remove2", "remove1")

    @pytest.mark.parametrize("name", ["k2", "c6", "q3", "domino", "tree15"])
    def test_reverse_is_an_involution(self, name):
        medium = fixture_medium(name)
        for token_id in medium.token_ids:
            reverse = reverse_of(medium, token_id)
            assert reverse.id != token_id
            assert reverse_of(medium, reverse.id).id == token_id


class TestMessages:
    def test_empty_message_rejected(self, q3):
        with pytest.raises(InputError):
            as_message([])
        with pytest.raises(InputError):
            apply(q3, "{}", [])

    def test_unknown_token_rejected(self, q3):
        with pytest.raises(InputError):
            apply(q3, "{}", ["add9"])

    def test_unknown_state_rejected(self, q3):
        with pytest.raises(InputError):
            apply(q3, "{9}", ["add1"])

    def test_apply_left_to_right(self, q3):
        assert apply(q3, "{}", ["add1", "add2"]) == "{1,2}"
        assert apply(q3, "{}", ["remove1"]) == "{}"

    def test_content_and_length(self):
        message = ("add1", "add2", "add1")
        assert content(message) == frozenset({"add1", "add2"})
        assert length(message) == 3

    def test_concise_message(self, q3):
        stats = message_stats(q3, "{}", ["add1", "add2"])
        assert stats.effective and stats.stepwise_effective and stats.consistent and stats.concise
        assert not stats.vacuous and not stats.is_return
        assert stats.content == ["add1", "add2"]
        assert stats.length == 2

    def test_return_is_vacuous(self, q3):
        stats = message_stats(q3, "{}", ["add1", "remove1"])
        assert stats.is_return and stats.vacuous
        assert not stats.consistent and not stats.effective

    def test_repeated_token_not_stepwise_effective(self, q3):
        assert not is_stepwise_effective(q3, "{}", ["add1", "add1"])
        assert not is_concise(q3, "{}", ["add1", "add1"])

    def test_ineffective_single_token(self, q3):
        stats = message_stats(q3, "{}", ["remove1"])
        assert not stats.effective and not stats.stepwise_effective

    def test_stats_payload_uses_camel_case(self, q3):
        payload = message_stats(q3, "{}", ["add1"]).to_payload()
        assert {"stepwiseEffective", "isReturn"} <= set(payload)

    def test_consistency(self, q3):
        assert is_consistent(q3, ["add1", "add2"])
        assert not is_consistent(q3, ["add1", "remove1"])
        assert not jointly_consistent(q3, ["add1"], ["add2", "remove1"])

    def test_vacuous_requires_balanced_pairs(self, q3):
        assert is_vacuous(q3, ["add1", "add2", "remove1", "remove2"])
        assert not is_vacuous(q3, ["add1", "add1", "remove1"])
        assert not is_vacuous(q3, ["add1"])

    @hsettings(max_examples=50, deadline=None)
    @given(st.lists(st.sampled_from(Q3_TOKENS),
                    min_size=1, max_size=6),
           st.sampled_from(["{}", "{1}", "{1,2}", "{1,2,3}"]))
    def test_message_then_reverse_returns(self, message, state):
        q3 = hypercube_medium(3)
        path = q3.trajectory(state, message)
        if not all(path[i] != path[i + 1] for i in range(len(message))):
            return
        end = q3.apply(state, message)
        assert q3.apply(end, reverse_message(q3, message)) == state

    @hsettings(max_examples=50, deadline=None)
    @given(st.lists(st.sampled_from(Q3_TOKENS), min_size=1, max_size=4),
           st.lists(st.sampled_from(Q3_TOKENS), min_size=1, max_size=4),
           st.sampled_from(["{}", "{1}", "{1,2}", "{1,2,3}"]))
    def test_concatenation_stays_stepwise_effective(self, first, second, state):
        q3 = hypercube_medium(3)
        if not is_stepwise_effective(q3, state, first):
            return
        middle = q3.apply(state, first)
        if not is_stepwise_effective(q3, middle, second):
            return
        assert is_stepwise_effective(q3, state, first + second)
        assert q3.apply(state, first + second) == q3.apply(middle, second)

    @hsettings(max_examples=100, deadline=None)
    @given(st.lists(st.sampled_from(Q3_TOKENS), min_size=1, max_size=7))
    def test_vacuous_messages_have_even_length(self, message):
        if is_vacuous(hypercube_medium(3), message):
            assert len(message) % 2 == 0

    @pytest.mark.parametrize("message", [["add1", "remove1"], ["add1", "add2", "remove2", "remove1"],
                                         ["add3", "remove1", "remove3", "add1"]])
    def test_known_vacuous_messages_are_even(self, q3, message):
        assert is_vacuous(q3, message)
        assert len(message) % 2 == 0


class TestMutations:
    def test_without_token_drops_reverse(self, q3):
        mutated = without_token(q3, "add1")
        assert "add1" not in mutated.token_ids
        assert mutated.reverse_id("remove1") is None

    def test_split_token_keeps_reverses(self, q3):
        mutated = split_token(q3, "add1")
        assert {"add1.a", "add1.b", "remove1.a", "remove1.b"} <= set(mutated.token_ids)
        assert mutated.reverse_id("add1.a") == "remove1.a"
        assert mutated.reverse_id("add1.b") == "remove1.b"
        assert len(mutated.tokens["add1.a"].moves) == 1

    def test_split_single_move_token_rejected(self, k2):
        with pytest.raises(InputError):
            split_token(k2, "t01")
