import logging
from collections import deque
from dataclasses import dataclass
from typing import Hashable

from fa.automaton import Edge, FiniteAutomaton
from timed.model import LocationLayer, TimedAutomaton, order_key

from .region import reset, satisfies, successor_chain, zero_region

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RegionState(LocationLayer):
    """A location paired with a clock region (or an integer region)"""

    location: Hashable
    region: object

    @property
    def base(self):
        return self.location

    def sort_key(self) -> tuple:
        return (order_key(self.location), self.region.sort_key())

    def __str__(self):
        return f"({self.location},{self.region.describe()})"


def region_steps(model: TimedAutomaton):
    """Explore the reachable region states of ``model``.

    Returns the states in discovery order and, for every step, the triple
    ``(source state, model transition, target state)``. A step exists when
    some time successor of the source region satisfies the guard; the
    target region is that successor with the transition's resets applied.
    """
    kappa = model.kappa
    start = zero_region(kappa)
    initial = [RegionState(location, start) for location in sorted(model.initial, key=order_key)]

    states, steps = list(initial), []
    seen = set(initial)
    queue = deque(initial)
    while queue:
        state = queue.popleft()
        outgoing = model.outgoing.get(state.location, ())
        found = []
        for later in successor_chain(state.region):
            for transition in outgoing:
                if not satisfies(later, transition.guard):
                    continue
                target = RegionState(transition.target, reset(later, transition.resets))
                step = (state, transition, target)
                if step not in found:
                    found.append(step)
        for step in found:
            steps.append(step)
            target = step[2]
            if target not in seen:
                seen.add(target)
                states.append(target)
                queue.append(target)
    return states, steps


def build_region_automaton(model: TimedAutomaton) -> FiniteAutomaton:
    states, steps = region_steps(model)
    edges = []
    seen = set()
    for source, transition, target in steps:
        edge = Edge(source, transition.label, target)
        if edge not in seen:
            seen.add(edge)
            edges.append(edge)

    start = zero_region(model.kappa)
    ordered = tuple(sorted(states, key=order_key))
    automaton = FiniteAutomaton(
        alphabet=model.alphabet,
        states=ordered,
        initial=frozenset(s for s in ordered if s.location in model.initial and s.region == start),
        accepting=frozenset(s for s in ordered if s.location in model.accepting),
        edges=tuple(sorted(edges, key=lambda e: (order_key(e.source), e.label, order_key(e.target)))),
    )
    logger.debug("region automaton: %d states, %d edges", len(automaton.states), len(automaton.edges))
    return automaton
