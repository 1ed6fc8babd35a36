import pytest

from constructions.ctr import build_ctr
from constructions.integral import build_integral_automaton
from generators import random_model
from oracle.language import bounded_language
from reduction.reduction import compute_reduction
from reduction.simulation import backward_simulation, forward_simulation
from regions.automaton import RegionState
from regions.integer import IntegerRegion
from timed.model import Guard, TimedAutomaton, Transition, base_location, hide_unobservable


def state(location, value=0):
    return RegionState(location, IntegerRegion(("x",), (1,), (value,)))


def tiny(transitions, initial=(state("p"),), extra=()):
    locations = sorted({s for t in transitions for s in (t.source, t.target)} | set(initial) | set(extra),
                       key=lambda s: s.sort_key())
    return TimedAutomaton(
        alphabet={"a", "b"}, locations=locations, initial=initial, accepting=locations, clocks=("x",),
        transitions=transitions,
    )


def step(source, label, target):
    return Transition(source, label, Guard(), (), target)


@pytest.fixture(scope="module")
def discrete_ctr(fig5):
    model, spec = fig5
    return build_ctr(hide_unobservable(model, spec))


def l4(description, ctr):
    return next(s for s in ctr.locations if s.location == "l4" and str(s.region) == description)


def test_forward_simulation_of_discrete_time_example(discrete_ctr):
    forward = forward_simulation(discrete_ctr)
    zero, inside, one = (l4(d, discrete_ctr) for d in ("x=0", "0<x<1", "x=1"))
    assert forward.holds(inside, zero)
    assert forward.holds(one, zero)
    assert all(forward.holds(s, s) for s in discrete_ctr.locations)


def test_backward_simulation_of_discrete_time_example(discrete_ctr):
    backward = backward_simulation(discrete_ctr)
    zero, inside = l4("x=0", discrete_ctr), l4("0<x<1", discrete_ctr)
    assert backward.holds(inside, zero)
    assert not backward.holds(zero, inside)


def test_simulations_pair_same_locations_only(discrete_ctr):
    for relation in (forward_simulation(discrete_ctr), backward_simulation(discrete_ctr)):
        assert all(base_location(s) == base_location(t) for s, t in relation.pairs)
        assert relation.iterations <= relation.candidates + 1


def test_discrete_time_example_reduction(discrete_ctr):
    reduction = compute_reduction(discrete_ctr)
    zero = l4("x=0", discrete_ctr)
    assert len(reduction.automaton.locations) == 5
    assert reduction.removed == {l4("0<x<1", discrete_ctr): zero, l4("x=1", discrete_ctr): zero}
    assert reduction.report() == ["(l4,0<x<1) simulated by (l4,x=0)", "(l4,x=1) simulated by (l4,x=0)"]


def test_state_without_moves_yields_to_its_simulator():
    start, idle, busy = state("p"), state("q", 0), state("q", 1)
    ctr = tiny((step(start, "a", idle), step(start, "a", busy), step(busy, "b", start)))
    assert forward_simulation(ctr).holds(idle, busy)
    reduction = compute_reduction(ctr)
    assert reduction.removed == {idle: busy}
    assert reduction.automaton.locations == (start, busy)


def test_distinct_behaviours_are_kept():
    start, first, second = state("p"), state("q", 0), state("q", 1)
    ctr = tiny((step(start, "a", first), step(start, "b", second)))
    reduction = compute_reduction(ctr)
    assert reduction.removed == {}
    assert reduction.automaton == ctr


def test_initial_states_are_never_removed():
    ctr = tiny((), initial=(state("p", 0), state("p", 1)))
    assert backward_simulation(ctr).holds(state("p", 0), state("p", 1))
    assert compute_reduction(ctr).automaton.locations == ctr.locations


def languages(automaton, spec, depth):
    fa = build_integral_automaton(automaton)
    def reaching(locations):
        return bounded_language(fa, fa.initial, [s for s in fa.states if base_location(s) in locations], depth)
    return (
        bounded_language(fa, fa.initial, fa.accepting, depth).words,
        reaching(spec.secret).words,
        reaching(spec.nonsecret).words,
    )


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(50))
def test_reduction_preserves_discrete_languages(seed):
    model, spec = random_model(seed, max_locations=4, max_clocks=2)
    ctr = build_ctr(hide_unobservable(model, spec))
    reduction = compute_reduction(ctr)
    assert languages(ctr, spec, 6) == languages(reduction.automaton, spec, 6)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(40))
def test_reduction_preserves_longer_one_clock_languages(seed):
    model, spec = random_model(seed, max_clocks=1)
    ctr = build_ctr(hide_unobservable(model, spec))
    reduction = compute_reduction(ctr)
    assert languages(ctr, spec, 8) == languages(reduction.automaton, spec, 8)


@pytest.mark.parametrize("seed", range(40))
def test_reduction_audit(seed):
    model, spec = random_model(seed)
    ctr = build_ctr(hide_unobservable(model, spec))
    reduction = compute_reduction(ctr)
    assert reduction.automaton.initial == ctr.initial
    assert len(reduction.automaton.locations) + len(reduction.removed) <= len(ctr.locations)
    for removed, survivor in reduction.removed.items():
        assert removed not in ctr.initial
        assert survivor not in reduction.removed
        assert base_location(removed) == base_location(survivor)
        assert reduction.forward.holds(removed, survivor)
        assert reduction.backward.holds(removed, survivor)
        assert removed not in reduction.automaton.locations
