import logging
from collections import deque
from dataclasses import dataclass, field, replace

from timed.model import TimedAutomaton

from .simulation import SimulationRelation, backward_simulation, forward_simulation, transition_key

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Reduction:
    automaton: TimedAutomaton
    forward: SimulationRelation
    backward: SimulationRelation
    removed: dict = field(default_factory=dict)

    def report(self) -> list:
        return [f"{state} simulated by {survivor}" for state, survivor in self.removed.items()]


def _restrict(ctr: TimedAutomaton, alive) -> TimedAutomaton:
    alive = set(alive)
    return replace(
        ctr,
        locations=tuple(s for s in ctr.locations if s in alive),
        initial=ctr.initial & alive,
        accepting=ctr.accepting & alive,
        transitions=tuple(t for t in ctr.transitions if t.source in alive and t.target in alive),
    )


def _reachable(model: TimedAutomaton) -> TimedAutomaton:
    seen = set(model.initial)
    queue = deque(model.initial)
    while queue:
        state = queue.popleft()
        for transition in model.outgoing.get(state, ()):
            if transition.target not in seen:
                seen.add(transition.target)
                queue.append(transition.target)
    return _restrict(model, seen)


def _entries_mirrored(current: TimedAutomaton, removed, survivor) -> bool:
    """Every way into ``removed`` from another state also leads into ``survivor``"""
    into_survivor = {
        (t.source, transition_key(t)) for t in current.transitions if t.target == survivor
    }
    return all(
        (t.source, transition_key(t)) in into_survivor
        for t in current.transitions
        if t.target == removed and t.source != removed
    )


def compute_reduction(ctr: TimedAutomaton) -> Reduction:
    """Remove non-initial states simulated forward and backward by a surviving same-location state.

    States are visited in the automaton's order; a removed state no longer
    serves as a simulator. A candidate is only removed when every entry
    into it is duplicated into its simulator and the forward simulation
    still holds on what is left, so the accepting, secret and non-secret
    languages stay the same after each removal.
    """
    forward = forward_simulation(ctr)
    backward = backward_simulation(ctr)

    current = ctr
    chosen = {}
    still_forward = forward
    for state in ctr.locations:
        if state in ctr.initial:
            continue
        for survivor in current.locations:
            if survivor == state:
                continue
            if not (forward.holds(state, survivor) and backward.holds(state, survivor)):
                continue
            if not _entries_mirrored(current, state, survivor):
                continue
            if not still_forward.holds(state, survivor):
                continue
            chosen[state] = survivor
            current = _restrict(current, [s for s in current.locations if s != state])
            still_forward = forward_simulation(current)
            break

    removed = {}
    for state, survivor in chosen.items():
        while survivor in chosen:
            survivor = chosen[survivor]
        removed[state] = survivor

    reduced = _reachable(current)
    logger.info(
        "📉 reduced %d states to %d (%d removed by simulation)",
        len(ctr.locations), len(reduced.locations), len(removed),
    )
    return Reduction(reduced, forward, backward, removed)


def reduce_ctr(ctr: TimedAutomaton) -> TimedAutomaton:
    return compute_reduction(ctr).automaton
