import pytest

from timed.errors import ReservedSymbolError
from timed.model import (
    DELTA,
    EPSILON,
    TICK,
    AtomicConstraint,
    Guard,
    OpacitySpec,
    TimedAutomaton,
    Transition,
    check_integer_resets,
    hide_unobservable,
    non_integer_resets,
    validate,
)


def atom(clock, op, bound):
    return AtomicConstraint(clock, op, bound)


def small_model(**overrides):
    fields = dict(
        alphabet={"a"},
        locations=("p", "q"),
        initial={"p"},
        accepting={"q"},
        clocks=("x",),
        transitions=(Transition("p", "a", Guard.of(atom("x", "=", 1)), {"x"}, "q"),),
    )
    fields.update(overrides)
    return TimedAutomaton(**fields)


def test_bundled_models_are_valid(fig1, fig5):
    for model, spec in (fig1, fig5):
        assert validate(model, spec) == []


def test_missing_initial_location_is_reported():
    assert validate(small_model(initial=set())) == ["no initial location"]


def test_undeclared_reset_clock_is_reported():
    bad = Transition("p", "a", Guard(), {"y"}, "q")
    diagnostics = validate(small_model(transitions=(bad,)))
    assert len(diagnostics) == 1
    assert diagnostics[0].startswith("undeclared clock in reset: y")


def test_undeclared_label_and_location():
    bad = Transition("p", "b", Guard(), set(), "r")
    diagnostics = validate(small_model(transitions=(bad,)))
    assert any(d.startswith("undeclared label: b") for d in diagnostics)
    assert any(d.startswith("undeclared target location: r") for d in diagnostics)


def test_spec_symbols_must_be_declared():
    spec = OpacitySpec(observable={"z"}, secret={"r"})
    diagnostics = validate(small_model(), spec)
    assert "observable symbol not in alphabet: z" in diagnostics
    assert "undeclared secret location: r" in diagnostics


def test_silent_label_needs_silent_automaton():
    silent = Transition("p", EPSILON, Guard(), set(), "q")
    assert validate(small_model(transitions=(silent,)))
    assert validate(small_model(transitions=(silent,), silent=True)) == []


@pytest.mark.parametrize("symbol", [DELTA, TICK])
def test_time_symbols_are_reserved(symbol):
    tick = Transition("p", symbol, Guard(), set(), "q")
    diagnostics = validate(small_model(alphabet={"a", symbol}, transitions=(tick,)))
    assert f"reserved time symbol {symbol} in alphabet" in diagnostics
    assert any(d.startswith(f"reserved time symbol as label: {symbol}") for d in diagnostics)


def test_guard_is_canonical():
    first = Guard.of(atom("y", "<", 2), atom("x", ">=", 1), atom("x", ">=", 1))
    second = Guard.of(atom("x", ">=", 1), atom("y", "<", 2))
    assert first == second
    assert str(first) == "x>=1 && y<2"
    assert str(Guard()) == "true"


def test_guard_closure_relaxes_strict_atoms_only():
    guard = Guard.of(atom("x", ">", 1), atom("y", "<", 2), atom("x", "=", 1))
    assert guard.closed() == Guard.of(atom("x", ">=", 1), atom("y", "<=", 2), atom("x", "=", 1))


@pytest.mark.parametrize("op, bound", [("<>", 1), ("<", -1), ("=", 1.5)])
def test_atomic_constraint_rejects_bad_input(op, bound):
    with pytest.raises(ValueError):
        atom("x", op, bound)


def test_kappa_is_the_largest_constant_per_clock(fig1):
    model, _ = fig1
    assert model.kappa == {"x": 1}
    two_clocks = small_model(
        clocks=("x", "y"),
        transitions=(
            Transition("p", "a", Guard.of(atom("x", "<", 3), atom("x", ">", 1)), set(), "q"),
        ),
    )
    assert two_clocks.kappa == {"x": 3, "y": 0}


def test_integer_reset_check(fig1, fig5):
    assert check_integer_resets(fig1[0])
    assert not check_integer_resets(fig5[0])
    offending = non_integer_resets(fig5[0])
    assert [(t.source, t.target) for t in offending] == [("l0", "l1"), ("l2", "l3"), ("l3", "l3"), ("l4", "l4")]


def test_model_without_resets_has_integer_resets():
    plain = small_model(transitions=(Transition("p", "a", Guard.of(atom("x", "<", 1)), set(), "q"),))
    assert check_integer_resets(plain)


def test_hiding_relabels_only_unobservable_transitions(fig1):
    model, spec = fig1
    hidden = hide_unobservable(model, spec)
    assert hidden.alphabet == {"a"}
    assert hidden.silent
    assert hidden.labels == {"a", EPSILON}
    for before, after in zip(model.transitions, hidden.transitions):
        assert after.label == (before.label if before.label == "a" else EPSILON)
        assert (after.source, after.guard, after.resets, after.target) == (
            before.source, before.guard, before.resets, before.target,
        )
    assert check_integer_resets(hidden) == check_integer_resets(model)


def test_hiding_with_everything_observable_keeps_transitions(fig5):
    model, _ = fig5
    hidden = hide_unobservable(model, OpacitySpec(observable=model.alphabet))
    assert hidden.transitions == model.transitions
    assert hidden.labels == model.alphabet | {EPSILON}


def test_hiding_twice_is_rejected(fig1):
    model, spec = fig1
    with pytest.raises(ReservedSymbolError):
        hide_unobservable(hide_unobservable(model, spec), spec)
