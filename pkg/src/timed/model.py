from abc import ABC, abstractmethod
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property
from typing import Hashable, Mapping

from .errors import ReservedSymbolError

EPSILON = "~eps~"
DELTA = "δ"
TICK = "✓"
RESERVED = frozenset({EPSILON, DELTA, TICK})

OPERATORS = ("<", "<=", "=", ">=", ">")
_CLOSURE = {"<": "<=", ">": ">="}


@dataclass(frozen=True)
class AtomicConstraint:
    """Single clock comparison ``clock op bound``"""

    clock: str
    op: str
    bound: int

    def __post_init__(self):
        if self.op not in OPERATORS:
            raise ValueError(f"unknown comparison operator {self.op!r}")
        if not isinstance(self.bound, int) or self.bound < 0:
            raise ValueError(f"clock bound must be a natural number, got {self.bound!r}")

    @property
    def strict(self) -> bool:
        return self.op in _CLOSURE

    def holds(self, value) -> bool:
        value = Fraction(value)
        if self.op == "<":
            return value < self.bound
        if self.op == "<=":
            return value <= self.bound
        if self.op == "=":
            return value == self.bound
        if self.op == ">=":
            return value >= self.bound
        return value > self.bound

    def closed(self) -> "AtomicConstraint":
        return AtomicConstraint(self.clock, _CLOSURE.get(self.op, self.op), self.bound)

    def sort_key(self):
        return (self.clock, OPERATORS.index(self.op), self.bound)

    def __str__(self):
        return f"{self.clock}{self.op}{self.bound}"


@dataclass(frozen=True)
class Guard:
    """Conjunction of atomic constraints; no atoms means true.

    Atoms are kept sorted and de-duplicated so that two guards written
    differently but denoting the same conjunction compare equal.
    """

    atoms: tuple = ()

    def __post_init__(self):
        atoms = sorted(set(self.atoms), key=AtomicConstraint.sort_key)
        object.__setattr__(self, "atoms", tuple(atoms))

    @classmethod
    def of(cls, *atoms) -> "Guard":
        return cls(tuple(atoms))

    def conjoin(self, *atoms) -> "Guard":
        return Guard(self.atoms + tuple(atoms))

    def closed(self) -> "Guard":
        return Guard(tuple(atom.closed() for atom in self.atoms))

    def holds(self, valuation: Mapping[str, Fraction]) -> bool:
        return all(atom.holds(valuation[atom.clock]) for atom in self.atoms)

    @property
    def clocks(self) -> frozenset:
        return frozenset(atom.clock for atom in self.atoms)

    def __str__(self):
        if not self.atoms:
            return "true"
        return " && ".join(str(atom) for atom in self.atoms)


TRUE = Guard()


@dataclass(frozen=True)
class Transition:
    source: Hashable
    label: str
    guard: Guard
    resets: frozenset
    target: Hashable

    def __post_init__(self):
        object.__setattr__(self, "resets", frozenset(self.resets))

    def relabel(self, label: str) -> "Transition":
        return replace(self, label=label)

    def __str__(self):
        resets = ", ".join(sorted(self.resets))
        return f"{self.source} --{self.label} [{self.guard}] {{{resets}}}--> {self.target}"


class LocationLayer(ABC):
    """A composite location wrapping an underlying one (phase copy, region pair, ...)"""

    @property
    @abstractmethod
    def base(self) -> Hashable:
        """The wrapped location one layer down"""

    @abstractmethod
    def sort_key(self) -> tuple:
        """Total order used for deterministic construction output"""


def base_location(location):
    """Peel every layer off a composite location down to the original one"""
    while isinstance(location, LocationLayer):
        location = location.base
    return location


def order_key(location) -> tuple:
    if isinstance(location, LocationLayer):
        return location.sort_key()
    return (str(location),)


@dataclass(frozen=True)
class TimedAutomaton:
    alphabet: frozenset
    locations: tuple
    initial: frozenset
    accepting: frozenset
    clocks: tuple
    transitions: tuple = ()
    silent: bool = False

    def __post_init__(self):
        object.__setattr__(self, "alphabet", frozenset(self.alphabet))
        object.__setattr__(self, "locations", tuple(self.locations))
        object.__setattr__(self, "initial", frozenset(self.initial))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(self, "clocks", tuple(dict.fromkeys(self.clocks)))
        object.__setattr__(self, "transitions", tuple(self.transitions))

    @cached_property
    def kappa(self) -> dict:
        """Largest constant compared against each clock (0 when never compared)"""
        kappa = {clock: 0 for clock in self.clocks}
        for transition in self.transitions:
            for atom in transition.guard.atoms:
                if atom.clock in kappa:
                    kappa[atom.clock] = max(kappa[atom.clock], atom.bound)
        return kappa

    @cached_property
    def outgoing(self) -> dict:
        index = {location: [] for location in self.locations}
        for transition in self.transitions:
            index.setdefault(transition.source, []).append(transition)
        return {location: tuple(edges) for location, edges in index.items()}

    @property
    def labels(self) -> frozenset:
        if self.silent:
            return self.alphabet | {EPSILON}
        return self.alphabet


@dataclass(frozen=True)
class OpacitySpec:
    observable: frozenset = field(default_factory=frozenset)
    secret: frozenset = field(default_factory=frozenset)
    nonsecret: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "observable", frozenset(self.observable))
        object.__setattr__(self, "secret", frozenset(self.secret))
        object.__setattr__(self, "nonsecret", frozenset(self.nonsecret))


def validate(model: TimedAutomaton, spec: OpacitySpec = None) -> list:
    """Return diagnostics for every broken invariant of a user model; empty when valid"""
    diagnostics = []
    locations = set(model.locations)
    clocks = set(model.clocks)

    if len(locations) != len(model.locations):
        diagnostics.append("duplicate location declaration")
    if not model.initial:
        diagnostics.append("no initial location")
    for location in sorted(model.initial - locations, key=order_key):
        diagnostics.append(f"undeclared initial location: {location}")
    for location in sorted(model.accepting - locations, key=order_key):
        diagnostics.append(f"undeclared accepting location: {location}")
    if EPSILON in model.alphabet:
        diagnostics.append(f"reserved silent symbol {EPSILON} in alphabet")
    for symbol in sorted(model.alphabet & {DELTA, TICK}):
        diagnostics.append(f"reserved time symbol {symbol} in alphabet")

    for transition in model.transitions:
        if transition.source not in locations:
            diagnostics.append(f"undeclared source location: {transition.source} ({transition})")
        if transition.target not in locations:
            diagnostics.append(f"undeclared target location: {transition.target} ({transition})")
        for clock in sorted(transition.resets - clocks):
            diagnostics.append(f"undeclared clock in reset: {clock} ({transition})")
        for clock in sorted(transition.guard.clocks - clocks):
            diagnostics.append(f"undeclared clock in guard: {clock} ({transition})")
        if transition.label == EPSILON:
            if not model.silent:
                diagnostics.append(f"silent label in automaton without silent moves ({transition})")
        elif transition.label in (DELTA, TICK):
            diagnostics.append(f"reserved time symbol as label: {transition.label} ({transition})")
        elif transition.label not in model.alphabet:
            diagnostics.append(f"undeclared label: {transition.label} ({transition})")

    if spec is not None:
        for symbol in sorted(spec.observable - model.alphabet):
            diagnostics.append(f"observable symbol not in alphabet: {symbol}")
        for location in sorted(spec.secret - locations, key=order_key):
            diagnostics.append(f"undeclared secret location: {location}")
        for location in sorted(spec.nonsecret - locations, key=order_key):
            diagnostics.append(f"undeclared non-secret location: {location}")
    return diagnostics


def non_integer_resets(model: TimedAutomaton) -> list:
    return [
        transition
        for transition in model.transitions
        if transition.resets and not any(atom.op == "=" for atom in transition.guard.atoms)
    ]


def check_integer_resets(model: TimedAutomaton) -> bool:
    """True iff every resetting transition carries an equality atom"""
    return not non_integer_resets(model)


def hide_unobservable(model: TimedAutomaton, spec: OpacitySpec) -> TimedAutomaton:
    if model.silent or EPSILON in model.alphabet:
        raise ReservedSymbolError(f"model already contains the silent symbol {EPSILON}")
    transitions = tuple(
        transition if transition.label in spec.observable else transition.relabel(EPSILON)
        for transition in model.transitions
    )
    return replace(
        model,
        alphabet=frozenset(spec.observable & model.alphabet),
        transitions=transitions,
        silent=True,
    )

