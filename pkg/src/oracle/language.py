from dataclasses import dataclass

from fa.automaton import FiniteAutomaton
from timed.model import EPSILON


@dataclass(frozen=True)
class BoundedLanguage:
    words: frozenset
    depth: int

    def __contains__(self, word):
        return tuple(word) in self.words

    def __len__(self):
        return len(self.words)

    def of_length(self, length) -> frozenset:
        return frozenset(word for word in self.words if len(word) == length)

    def shortest_outside(self, other: "BoundedLanguage"):
        missing = self.words - other.words
        if not missing:
            return None
        return min(missing, key=lambda word: (len(word), word))


def _adjacency(fa: FiniteAutomaton) -> dict:
    moves = {}
    for source, label, target in fa.edges:
        moves.setdefault(source, {}).setdefault(label, set()).add(target)
    return moves


def _silent_close(moves, states) -> frozenset:
    frontier, closed = set(states), set(states)
    while frontier:
        reached = set()
        for state in frontier:
            reached |= moves.get(state, {}).get(EPSILON, set())
        frontier = reached - closed
        closed |= frontier
    return frozenset(closed)


def bounded_language(fa: FiniteAutomaton, sources, targets, depth: int) -> BoundedLanguage:
    """Words of length at most ``depth`` labelling a path from ``sources`` to ``targets``"""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    moves = _adjacency(fa)
    targets = frozenset(targets)
    symbols = sorted(fa.alphabet - {EPSILON})

    layer = {(): _silent_close(moves, sources)}
    words = set()
    for length in range(depth + 1):
        following = {}
        for word, states in layer.items():
            if states & targets:
                words.add(word)
            if length == depth:
                continue
            for symbol in symbols:
                reached = set()
                for state in states:
                    reached |= moves.get(state, {}).get(symbol, set())
                if reached:
                    following[word + (symbol,)] = _silent_close(moves, reached)
        layer = following
    return BoundedLanguage(frozenset(words), depth)


def accepted_language(fa: FiniteAutomaton, depth: int) -> BoundedLanguage:
    return bounded_language(fa, fa.initial, fa.accepting, depth)
