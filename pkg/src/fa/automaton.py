from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Hashable, NamedTuple

from timed.errors import MetadataError
from timed.model import EPSILON, LocationLayer, OpacitySpec, base_location, order_key


class Edge(NamedTuple):
    source: Hashable
    label: str
    target: Hashable


@dataclass(frozen=True)
class FiniteAutomaton:
    """Labeled transition graph; ``EPSILON`` edges are silent"""

    alphabet: frozenset
    states: tuple
    initial: frozenset
    accepting: frozenset
    edges: tuple = ()
    secret: frozenset = field(default_factory=frozenset)
    nonsecret: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        for name in ("alphabet", "initial", "accepting", "secret", "nonsecret"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "edges", tuple(Edge(*edge) for edge in self.edges))

        declared = set(self.states)
        for name in ("initial", "accepting", "secret", "nonsecret"):
            stray = getattr(self, name) - declared
            if stray:
                raise ValueError(f"{name} states not declared: {sorted(map(str, stray))}")
        for edge in self.edges:
            if edge.source not in declared or edge.target not in declared:
                raise ValueError(f"edge endpoint not declared: {edge}")
            if edge.label != EPSILON and edge.label not in self.alphabet:
                raise ValueError(f"edge label not in alphabet: {edge}")

    @cached_property
    def successors(self) -> dict:
        index = {state: {} for state in self.states}
        for source, label, target in self.edges:
            targets = index[source].setdefault(label, [])
            if target not in targets:
                targets.append(target)
        return {
            state: {label: tuple(targets) for label, targets in moves.items()}
            for state, moves in index.items()
        }

    def step(self, states, label) -> frozenset:
        return frozenset(
            target for state in states for target in self.successors[state].get(label, ())
        )

    @property
    def is_deterministic(self) -> bool:
        if len(self.initial) > 1:
            return False
        return all(
            label != EPSILON and len(targets) == 1
            for moves in self.successors.values()
            for label, targets in moves.items()
        )


@dataclass(frozen=True)
class SubsetState:
    """ε-closed set of NFA states, used as a DFA state"""

    members: tuple

    def __post_init__(self):
        members = tuple(sorted(set(self.members), key=order_key))
        if not members:
            raise ValueError("subset states are never empty")
        object.__setattr__(self, "members", members)

    def __contains__(self, state):
        return state in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __str__(self):
        return "{" + ", ".join(str(member) for member in self.members) + "}"


def epsilon_closure(fa: FiniteAutomaton, states) -> frozenset:
    closure = set(states)
    stack = list(closure)
    while stack:
        state = stack.pop()
        for target in fa.successors[state].get(EPSILON, ()):
            if target not in closure:
                closure.add(target)
                stack.append(target)
    return frozenset(closure)


def project_locations(subset) -> frozenset:
    """Underlying locations of the members, with phase and region layers stripped"""
    locations = set()
    for member in subset:
        if not isinstance(member, LocationLayer):
            raise MetadataError(f"state {member!r} carries no location metadata")
        locations.add(base_location(member))
    return frozenset(locations)


def mark_secrets(fa: FiniteAutomaton, spec: OpacitySpec) -> FiniteAutomaton:
    """Tag states whose underlying location is secret or non-secret"""
    return replace(
        fa,
        secret=frozenset(s for s in fa.states if base_location(s) in spec.secret),
        nonsecret=frozenset(s for s in fa.states if base_location(s) in spec.nonsecret),
    )
