import logging
from collections import deque

from fa.automaton import Edge, FiniteAutomaton
from regions.automaton import RegionState
from regions.integer import zero_integer_region
from timed.model import TICK, TimedAutomaton, order_key
from timed.words import TimedWord

logger = logging.getLogger(__name__)


def build_integral_automaton(model: TimedAutomaton) -> FiniteAutomaton:
    """Discrete-time behaviour of ``model`` over integer regions with ✓ for each time unit"""
    start = zero_integer_region(model.kappa)
    initial = [RegionState(location, start) for location in sorted(model.initial, key=order_key)]

    states, edges, seen = list(initial), [], set(initial)
    known = set()
    queue = deque(initial)

    def visit(source, label, target):
        edge = Edge(source, label, target)
        if edge not in known:
            known.add(edge)
            edges.append(edge)
        if target not in seen:
            seen.add(target)
            states.append(target)
            queue.append(target)

    while queue:
        state = queue.popleft()
        for transition in model.outgoing.get(state.location, ()):
            if state.region.satisfies(transition.guard):
                visit(state, transition.label, RegionState(transition.target, state.region.reset(transition.resets)))
        visit(state, TICK, RegionState(state.location, state.region.tick()))

    ordered = tuple(sorted(states, key=order_key))
    automaton = FiniteAutomaton(
        alphabet=model.alphabet | {TICK},
        states=ordered,
        initial=frozenset(initial),
        accepting=frozenset(s for s in ordered if s.location in model.accepting),
        edges=tuple(sorted(edges, key=lambda e: (order_key(e.source), e.label, order_key(e.target)))),
    )
    logger.debug("integral automaton: %d states, %d edges", len(automaton.states), len(automaton.edges))
    return automaton


def encode_integral_word(word: TimedWord) -> tuple:
    """Integral timed word to ✓-word: one ✓ per elapsed time unit before each event"""
    if not word.is_integral:
        raise ValueError(f"timed word {word} has non-integer timestamps")
    symbols, now = [], 0
    for symbol, time in word:
        symbols.extend([TICK] * int(time - now))
        symbols.append(symbol)
        now = int(time)
    return tuple(symbols)


def decode_tick_word(symbols) -> TimedWord:
    """Inverse of :func:`encode_integral_word`; trailing ✓ symbols carry no event"""
    events, now = [], 0
    for symbol in symbols:
        if symbol == TICK:
            now += 1
        else:
            events.append((symbol, now))
    return TimedWord(tuple(events))
