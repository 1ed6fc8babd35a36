import logging
from dataclasses import dataclass

from timed.model import TimedAutomaton, base_location

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimulationRelation:
    """Pairs ``(smaller, larger)`` where ``larger`` simulates ``smaller``"""

    pairs: frozenset
    iterations: int = 0
    candidates: int = 0

    def holds(self, smaller, larger) -> bool:
        return (smaller, larger) in self.pairs

    def __contains__(self, pair):
        return pair in self.pairs

    def __len__(self):
        return len(self.pairs)


def transition_key(transition) -> tuple:
    """Label, canonical guard and resets, the part two matched transitions share"""
    return (transition.label, transition.guard, transition.resets)


def _index(ctr: TimedAutomaton, forward: bool) -> dict:
    index = {state: {} for state in ctr.locations}
    for transition in ctr.transitions:
        here, there = (
            (transition.source, transition.target) if forward else (transition.target, transition.source)
        )
        index[here].setdefault(transition_key(transition), set()).add(there)
    return index


def _same_location_pairs(ctr: TimedAutomaton, admissible) -> set:
    groups = {}
    for state in ctr.locations:
        groups.setdefault(base_location(state), []).append(state)
    return {
        (smaller, larger)
        for members in groups.values()
        for smaller in members
        for larger in members
        if admissible(smaller, larger)
    }


def _refine(ctr: TimedAutomaton, forward: bool, admissible) -> SimulationRelation:
    index = _index(ctr, forward)
    pairs = _same_location_pairs(ctr, admissible)
    candidates = len(pairs)

    iterations, changed = 0, True
    while changed:
        iterations += 1
        changed = False
        for smaller, larger in list(pairs):
            matched = index[larger]
            for key, moves in index[smaller].items():
                answers = matched.get(key, ())
                if not all(any((move, answer) in pairs for answer in answers) for move in moves):
                    pairs.discard((smaller, larger))
                    changed = True
                    break

    logger.debug(
        "%s simulation: %d of %d pairs after %d rounds",
        "forward" if forward else "backward", len(pairs), candidates, iterations,
    )
    return SimulationRelation(frozenset(pairs), iterations, candidates)


def forward_simulation(ctr: TimedAutomaton) -> SimulationRelation:
    """Maximal relation where the larger state matches every out-transition of the smaller"""
    return _refine(ctr, True, lambda smaller, larger: True)


def backward_simulation(ctr: TimedAutomaton) -> SimulationRelation:
    """Maximal relation where the larger state matches every in-transition of the smaller.

    An initial state is only simulated by initial states.
    """
    return _refine(ctr, False, lambda smaller, larger: smaller not in ctr.initial or larger in ctr.initial)
