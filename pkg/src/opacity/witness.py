from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from fa.automaton import FiniteAutomaton, SubsetState, project_locations
from timed.errors import WitnessError
from timed.model import DELTA, TICK, OpacitySpec, order_key
from timed.words import TimedWord, format_time


@dataclass(frozen=True)
class EventTiming:
    """When an observed event happened: at ``whole`` if exact, else strictly inside (whole, whole+1)"""

    symbol: str
    whole: int
    exact: bool

    def __str__(self):
        if self.exact:
            return f"({self.symbol},{self.whole})"
        return f"({self.symbol},{self.whole}<t<{self.whole + 1})"


def decode_observation(observation) -> tuple:
    """Read event times off an abstract observation.

    Each ✓ is one elapsed time unit; a δ means later events of the same unit
    happen strictly after the integer. Observations without δ therefore
    decode to exact integer times.
    """
    timings, now, fractional = [], 0, False
    for symbol in observation:
        if symbol == TICK:
            now += 1
            fractional = False
        elif symbol == DELTA:
            fractional = True
        else:
            timings.append(EventTiming(symbol, now, not fractional))
    return tuple(timings)


@dataclass(frozen=True)
class Witness:
    observation: tuple
    violating_subset: SubsetState
    secret_hits: frozenset = field(default_factory=frozenset)
    nonsecret_hits: frozenset = field(default_factory=frozenset)

    @property
    def timing(self) -> tuple:
        return decode_observation(self.observation)

    def timed_example(self) -> TimedWord:
        """A representative timed word: exact events at their integer, others half a unit later"""
        return TimedWord(tuple(
            (event.symbol, event.whole if event.exact else event.whole + Fraction(1, 2))
            for event in self.timing
        ))

    def to_dict(self) -> dict:
        return {
            "observation": list(self.observation),
            "violating_subset": [str(member) for member in self.violating_subset],
            "secret_hits": sorted(map(str, self.secret_hits)),
            "nonsecret_hits": sorted(map(str, self.nonsecret_hits)),
            "timing": [
                {"symbol": t.symbol, "time": t.whole, "exact": t.exact} for t in self.timing
            ],
            "timed_example": [
                [symbol, format_time(time)] for symbol, time in self.timed_example()
            ],
        }


def shortest_path(dfa: FiniteAutomaton, target) -> tuple:
    """Length-lexicographically least label sequence from the initial state to ``target``"""
    if not dfa.initial:
        raise WitnessError("automaton has no initial state")
    start = min(dfa.initial, key=order_key)
    parents = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        if state == target:
            break
        for label in sorted(dfa.successors[state]):
            for following in dfa.successors[state][label]:
                if following not in parents:
                    parents[following] = (state, label)
                    queue.append(following)
    if target not in parents:
        raise WitnessError(f"state {target} is not reachable from the initial state")

    labels = []
    state = target
    while parents[state] is not None:
        state, label = parents[state]
        labels.append(label)
    return tuple(reversed(labels))


def extract_witness(dfa: FiniteAutomaton, state, spec: OpacitySpec = None) -> Witness:
    observation = shortest_path(dfa, state)
    locations = project_locations(state)
    secret = spec.secret if spec is not None else frozenset()
    nonsecret = spec.nonsecret if spec is not None else frozenset()
    return Witness(
        observation=observation,
        violating_subset=state,
        secret_hits=frozenset(locations & secret),
        nonsecret_hits=frozenset(locations & nonsecret),
    )
