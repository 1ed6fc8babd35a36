from dataclasses import replace
from fractions import Fraction

import pytest

from fa.automaton import FiniteAutomaton, epsilon_closure, project_locations
from fa.determinize import determinize
from generators import random_model
from opacity.idtp import DiscreteTimeVerifier, verify_clto_idtp
from opacity.irta import IntegerResetVerifier, verify_clto_irta
from opacity.verdict import Verdict
from opacity.witness import EventTiming, decode_observation, shortest_path
from oracle.refute import bounded_opacity_refute
from timed.errors import ModelError, NotIntegerResetError, WitnessError
from timed.model import DELTA, TICK, Guard, OpacitySpec, TimedAutomaton, Transition
from timed.words import TimedWord


def replay(nfa, observation):
    states = epsilon_closure(nfa, nfa.initial)
    for symbol in observation:
        states = epsilon_closure(nfa, nfa.step(states, symbol))
    return states


def test_integer_reset_example_is_not_opaque(fig1):
    model, spec = fig1
    verdict = verify_clto_irta(model, spec)
    assert not verdict.opaque
    assert verdict.label == "NOT OPAQUE"
    witness = verdict.witness
    assert witness.observation == (DELTA, TICK, "a", DELTA, "a")
    (member,) = witness.violating_subset.members
    assert (member.location.location, member.location.phase) == ("l1", "+")
    assert witness.secret_hits == {"l1"}
    assert witness.nonsecret_hits == set()
    assert witness.timing == (EventTiming("a", 1, True), EventTiming("a", 1, False))
    assert witness.timed_example() == TimedWord((("a", 1), ("a", Fraction(3, 2))))


def test_integer_reset_example_stats(fig1):
    stats = verify_clto_irta(*fig1).stats
    assert stats["region_states"] == 20
    assert stats["regions"] == 5
    assert stats["regions"] <= stats["region_bound"] == 5
    assert stats["region_states"] <= stats["state_bound"] == 32
    assert stats["phase_clock"] == "c"
    assert set(stats["timings_ms"]) >= {"augment", "regions", "determinize", "scan"}


def test_integer_reset_example_without_secrets_is_opaque(fig1):
    model, spec = fig1
    assert verify_clto_irta(model, replace(spec, secret=frozenset())).opaque
    assert verify_clto_irta(model, replace(spec, secret={"l1"}, nonsecret={"l1"})).opaque


def test_phase_clock_is_renamed_when_taken(fig1):
    model, spec = fig1
    verdict = IntegerResetVerifier("x").verify(model, spec)
    assert verdict.stats["phase_clock"] == "x_1"
    assert verdict.witness.observation == (DELTA, TICK, "a", DELTA, "a")


def test_integer_reset_procedure_rejects_other_models(fig5):
    with pytest.raises(NotIntegerResetError) as caught:
        verify_clto_irta(*fig5)
    assert len(caught.value.transitions) == 4


@pytest.mark.parametrize("verify", [verify_clto_irta, verify_clto_idtp])
def test_user_tick_event_is_rejected(verify):
    model = TimedAutomaton(
        alphabet={"a", TICK},
        locations=("p", "s"),
        initial={"p"},
        accepting={"p", "s"},
        clocks=("x",),
        transitions=(Transition("p", TICK, Guard(), (), "s"),),
    )
    spec = OpacitySpec(observable={"a", TICK}, secret={"s"})
    with pytest.raises(ModelError) as caught:
        verify(model, spec)
    assert f"reserved time symbol {TICK} in alphabet" in caught.value.diagnostics


def test_discrete_time_example_is_opaque(fig5):
    model, spec = fig5
    verdict = verify_clto_idtp(model, spec)
    assert verdict.opaque
    assert verdict.witness is None
    assert verdict.stats["ctr_states"] == 7
    assert verdict.stats["reduced_states"] == 5
    assert verdict.stats["integral_states"] == 14
    assert verdict.stats["ctr_states"] <= verdict.stats["ctr_bound"]

    dfa = determinize(DiscreteTimeVerifier().build_nfa(model, spec, {}))
    for subset in dfa.states:
        locations = project_locations(subset)
        if "l3" in locations:
            assert "l4" in locations


def test_discrete_time_example_without_non_secret_locations(fig5):
    model, spec = fig5
    verdict = verify_clto_idtp(model, replace(spec, nonsecret=frozenset()))
    assert not verdict.opaque
    assert verdict.witness.observation == (TICK, "a", "b")
    assert verdict.witness.timed_example() == TimedWord.parse("(a,1)(b,1)")
    assert verify_clto_idtp(model, replace(spec, secret=frozenset())).opaque


def test_decode_observation():
    assert decode_observation(()) == ()
    assert decode_observation((TICK, TICK, "a", TICK)) == (EventTiming("a", 2, True),)
    assert [str(t) for t in decode_observation((DELTA, "a", TICK, "b"))] == ["(a,0<t<1)", "(b,1)"]


def test_shortest_path_prefers_smaller_labels():
    fa = FiniteAutomaton(
        alphabet={"a", "b"},
        states=("s", "p", "q", "t", "lost"),
        initial={"s"},
        accepting=set(),
        edges=(("s", "b", "p"), ("s", "a", "q"), ("p", "a", "t"), ("q", "b", "t")),
    )
    assert shortest_path(fa, "t") == ("a", "b")
    assert shortest_path(fa, "s") == ()
    with pytest.raises(WitnessError):
        shortest_path(fa, "lost")


def test_verdict_carries_witness_exactly_when_not_opaque(fig1):
    witness = verify_clto_irta(*fig1).witness
    with pytest.raises(ValueError):
        Verdict("clto", True, witness)
    with pytest.raises(ValueError):
        Verdict("clto", False)
    payload = Verdict("clto", False, witness).to_dict()
    assert payload["verdict"] == "NOT OPAQUE"
    assert payload["witness"]["timed_example"] == [["a", "1"], ["a", "1.5"]]


def check_against_oracle(verifier, model, spec, mode):
    verdict = verifier.verify(model, spec)
    found = bounded_opacity_refute(model, spec, mode, 8)
    if verdict.opaque:
        assert found is None
        return verdict
    witness = verdict.witness.observation
    assert found == (witness if len(witness) <= 8 else None)
    reached = replay(verifier.build_nfa(model, spec, {}), witness)
    assert reached == set(verdict.witness.violating_subset.members)
    assert project_locations(reached) & spec.secret
    assert not project_locations(reached) & spec.nonsecret
    return verdict


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(100))
def test_integer_reset_verdicts_agree_with_oracle(seed):
    model, spec = random_model(seed, integer_resets=True, max_locations=4)
    check_against_oracle(IntegerResetVerifier(), model, spec, "clto")


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(100))
def test_discrete_time_verdicts_agree_with_oracle(seed):
    model, spec = random_model(seed, max_locations=4)
    check_against_oracle(DiscreteTimeVerifier(), model, spec, "clto-idtp")


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(100))
def test_exact_opacity_implies_discrete_opacity(seed):
    model, spec = random_model(seed, integer_resets=True, max_locations=4)
    if verify_clto_irta(model, spec).opaque:
        assert verify_clto_idtp(model, spec).opaque


@pytest.mark.parametrize("seed", range(30))
def test_more_non_secret_locations_never_break_opacity(seed):
    model, spec = random_model(seed, integer_resets=True)
    larger = replace(spec, nonsecret=spec.nonsecret | {model.locations[-1]})
    for verify in (verify_clto_irta, verify_clto_idtp):
        if verify(model, spec).opaque:
            assert verify(model, larger).opaque


@pytest.mark.parametrize("seed", range(50))
def test_sizes_stay_within_bounds(seed):
    irta, spec = random_model(seed, integer_resets=True, max_locations=4)
    stats = verify_clto_irta(irta, spec).stats
    assert stats["region_states"] <= stats["state_bound"]
    assert stats["regions"] <= stats["region_bound"]

    model, spec = random_model(seed, max_locations=4)
    stats = verify_clto_idtp(model, spec).stats
    assert stats["ctr_states"] <= stats["ctr_bound"]
    assert stats["reduced_states"] <= stats["ctr_states"]
