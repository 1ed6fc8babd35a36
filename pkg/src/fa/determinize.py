import logging
from collections import deque

from timed.model import EPSILON

from .automaton import Edge, FiniteAutomaton, SubsetState, epsilon_closure

logger = logging.getLogger(__name__)


def determinize(fa: FiniteAutomaton) -> FiniteAutomaton:
    """Subset construction over the reachable ε-closed subsets.

    Subsets are discovered breadth-first with symbols in sorted order, so
    ``states`` lists them by the length-lexicographic order of the first
    word reaching each one.
    """
    alphabet = sorted(fa.alphabet - {EPSILON})
    start = SubsetState(epsilon_closure(fa, fa.initial)) if fa.initial else None
    if start is None:
        return FiniteAutomaton(frozenset(alphabet), (), frozenset(), frozenset())

    states, edges = [start], []
    seen = {start}
    queue = deque([start])
    while queue:
        subset = queue.popleft()
        for symbol in alphabet:
            moved = fa.step(subset.members, symbol)
            if not moved:
                continue
            target = SubsetState(epsilon_closure(fa, moved))
            edges.append(Edge(subset, symbol, target))
            if target not in seen:
                seen.add(target)
                states.append(target)
                queue.append(target)

    def touching(marked):
        return frozenset(subset for subset in states if any(m in marked for m in subset))

    dfa = FiniteAutomaton(
        alphabet=frozenset(alphabet),
        states=tuple(states),
        initial=frozenset({start}),
        accepting=touching(fa.accepting),
        edges=tuple(edges),
        secret=touching(fa.secret),
        nonsecret=touching(fa.nonsecret),
    )
    logger.debug("determinized %d states into %d subsets", len(fa.states), len(states))
    return dfa
