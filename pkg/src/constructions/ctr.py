import logging

from regions.automaton import region_steps
from regions.region import zero_region
from timed.model import TimedAutomaton, Transition, order_key

logger = logging.getLogger(__name__)


def build_ctr(model: TimedAutomaton) -> TimedAutomaton:
    """Closed timed region automaton of ``model``.

    Locations are the reachable region states; each region step becomes a
    transition carrying the original guard with strict comparisons relaxed,
    and the original resets.
    """
    states, steps = region_steps(model)
    start = zero_region(model.kappa)

    transitions, seen = [], set()
    for source, transition, target in steps:
        closed = Transition(source, transition.label, transition.guard.closed(), transition.resets, target)
        if closed not in seen:
            seen.add(closed)
            transitions.append(closed)
    transitions.sort(key=lambda t: (order_key(t.source), t.label, str(t.guard), sorted(t.resets), order_key(t.target)))

    locations = tuple(sorted(states, key=order_key))
    ctr = TimedAutomaton(
        alphabet=model.alphabet,
        locations=locations,
        initial=frozenset(s for s in locations if s.location in model.initial and s.region == start),
        accepting=frozenset(s for s in locations if s.location in model.accepting),
        clocks=model.clocks,
        transitions=tuple(transitions),
        silent=model.silent,
    )
    logger.debug("closed timed region automaton: %d locations, %d transitions", len(locations), len(transitions))
    return ctr
