import logging
from dataclasses import dataclass
from typing import Hashable

from timed.errors import ReservedSymbolError
from timed.model import (
    DELTA,
    TICK,
    AtomicConstraint,
    Guard,
    LocationLayer,
    TimedAutomaton,
    Transition,
    order_key,
)

logger = logging.getLogger(__name__)

INTEGRAL = "0"
FRACTIONAL = "+"
_PHASES = (INTEGRAL, FRACTIONAL)


@dataclass(frozen=True)
class PhasedLocation(LocationLayer):
    """Copy of a location in the integral (``0``) or fractional (``+``) time phase"""

    location: Hashable
    phase: str

    def __post_init__(self):
        if self.phase not in _PHASES:
            raise ValueError(f"unknown phase {self.phase!r}")

    @property
    def base(self):
        return self.location

    def sort_key(self) -> tuple:
        return (order_key(self.location), _PHASES.index(self.phase))

    def __str__(self):
        return f"{self.location}^{self.phase}"


def fresh_clock_name(model: TimedAutomaton, preferred="c") -> str:
    if preferred not in model.clocks:
        return preferred
    index = 1
    while f"{preferred}_{index}" in model.clocks:
        index += 1
    return f"{preferred}_{index}"


def augment(model: TimedAutomaton, phase_clock="c") -> TimedAutomaton:
    """Split every location into integral and fractional phases.

    The phase clock is reset at each integer boundary, so ``c=0`` marks the
    integral phase and ``0<c<1`` the fractional one; δ enters the fractional
    phase and ✓ returns to the integral phase at the next integer.
    """
    if phase_clock in model.clocks:
        raise ReservedSymbolError(f"phase clock {phase_clock!r} is already a clock of the model")

    at_integer = AtomicConstraint(phase_clock, "=", 0)
    inside = (AtomicConstraint(phase_clock, ">", 0), AtomicConstraint(phase_clock, "<", 1))
    boundary = AtomicConstraint(phase_clock, "=", 1)

    def lift(location, phase):
        return PhasedLocation(location, phase)

    transitions = []
    for t in model.transitions:
        transitions.append(
            Transition(lift(t.source, INTEGRAL), t.label, t.guard.conjoin(at_integer), t.resets, lift(t.target, INTEGRAL))
        )
    for t in model.transitions:
        transitions.append(
            Transition(lift(t.source, FRACTIONAL), t.label, t.guard.conjoin(*inside), t.resets, lift(t.target, FRACTIONAL))
        )
    ordered = sorted(model.locations, key=order_key)
    for location in ordered:
        transitions.append(Transition(lift(location, INTEGRAL), DELTA, Guard(inside), frozenset(), lift(location, FRACTIONAL)))
    for location in ordered:
        transitions.append(
            Transition(lift(location, FRACTIONAL), TICK, Guard.of(boundary), frozenset({phase_clock}), lift(location, INTEGRAL))
        )

    augmented = TimedAutomaton(
        alphabet=model.alphabet | {DELTA, TICK},
        locations=tuple(lift(location, phase) for location in model.locations for phase in _PHASES),
        initial=frozenset(lift(location, INTEGRAL) for location in model.initial),
        accepting=frozenset(lift(location, phase) for location in model.accepting for phase in _PHASES),
        clocks=model.clocks + (phase_clock,),
        transitions=tuple(transitions),
        silent=model.silent,
    )
    logger.debug("augmented %d locations into %d", len(model.locations), len(augmented.locations))
    return augmented
