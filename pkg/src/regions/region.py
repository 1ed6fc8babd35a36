import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from timed.model import Guard


@dataclass(frozen=True)
class Region:
    """Canonical clock region.

    ``intparts[i]`` is the integer part of clock ``clocks[i]``, or ``None``
    once the clock is above its bound ``bounds[i]``. ``fractions`` orders the
    bounded clocks by fractional part: ``fractions[0]`` holds the clocks with
    fractional part zero (possibly none), every later class is non-empty and
    strictly larger than the one before it.
    """

    clocks: tuple
    bounds: tuple
    intparts: tuple
    fractions: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "fractions", tuple(frozenset(group) for group in self.fractions) or (frozenset(),)
        )

    @property
    def kappa(self) -> dict:
        return dict(zip(self.clocks, self.bounds))

    def intpart(self, clock):
        return self.intparts[self.clocks.index(clock)]

    def is_integral(self, clock) -> bool:
        return clock in self.fractions[0]

    def class_index(self, clock) -> int:
        for index, group in enumerate(self.fractions):
            if clock in group:
                return index
        return len(self.fractions)

    def sort_key(self) -> tuple:
        return (
            tuple(bound + 1 if part is None else part for part, bound in zip(self.intparts, self.bounds)),
            tuple(self.class_index(clock) for clock in self.clocks),
        )

    def sample(self) -> dict:
        """One valuation inside the region"""
        count = len(self.fractions)
        valuation = {}
        for clock, part, bound in zip(self.clocks, self.intparts, self.bounds):
            if part is None:
                valuation[clock] = Fraction(bound) + Fraction(1, 2)
            else:
                valuation[clock] = part + Fraction(self.class_index(clock), count)
        return valuation

    def describe(self) -> str:
        """Readable class description, e.g. ``0<x=c<1`` or ``x=1,c=0``"""
        if not self.clocks:
            return "true"
        parts, seen = [], set()
        for clock in self.clocks:
            if clock in seen:
                continue
            part = self.intpart(clock)
            if part is None:
                parts.append(f"{clock}>{self.bounds[self.clocks.index(clock)]}")
                seen.add(clock)
                continue
            index = self.class_index(clock)
            peers = [
                other for other in self.clocks
                if self.intpart(other) == part and self.class_index(other) == index
            ]
            seen.update(peers)
            names = "=".join(peers)
            parts.append(f"{names}={part}" if index == 0 else f"{part}<{names}<{part + 1}")
        if len(self.fractions) > 2:
            chain = "<".join(
                "=".join(f"frac({clock})" for clock in self.clocks if clock in group)
                for group in self.fractions[1:]
            )
            parts.append(chain)
        return ",".join(parts)

    def __str__(self):
        return self.describe()


def region_of(valuation: Mapping[str, Fraction], kappa: Mapping[str, int]) -> Region:
    clocks = tuple(kappa)
    bounds = tuple(kappa[clock] for clock in clocks)
    intparts, fractional = [], {}
    for clock, bound in zip(clocks, bounds):
        value = Fraction(valuation[clock])
        if value < 0:
            raise ValueError(f"negative clock value {value} for {clock}")
        if value > bound:
            intparts.append(None)
            continue
        whole = math.floor(value)
        intparts.append(whole)
        fractional.setdefault(value - whole, []).append(clock)

    zero = frozenset(fractional.pop(Fraction(0), ()))
    groups = [frozenset(fractional[key]) for key in sorted(fractional)]
    return Region(clocks, bounds, tuple(intparts), (zero, *groups))


def zero_region(kappa: Mapping[str, int]) -> Region:
    return region_of({clock: 0 for clock in kappa}, kappa)


def time_successor(region: Region) -> Region:
    """The region entered first when time elapses from ``region``"""
    zero, rest = region.fractions[0], region.fractions[1:]
    intparts = list(region.intparts)

    if zero:
        # clocks leave their integer value; those sitting on their bound go above
        moving = set()
        for index, clock in enumerate(region.clocks):
            if clock in zero:
                if intparts[index] == region.bounds[index]:
                    intparts[index] = None
                else:
                    moving.add(clock)
        groups = (frozenset(moving),) if moving else ()
        return Region(region.clocks, region.bounds, tuple(intparts), (frozenset(), *groups, *rest))

    if rest:
        # the class with the largest fractional part reaches the next integer
        largest = rest[-1]
        for index, clock in enumerate(region.clocks):
            if clock in largest:
                intparts[index] += 1
        return Region(region.clocks, region.bounds, tuple(intparts), (largest, *rest[:-1]))

    return region


def successor_chain(region: Region) -> list:
    """``region`` followed by its time successors up to the unbounded fixpoint"""
    chain = [region]
    while True:
        following = time_successor(chain[-1])
        if following == chain[-1]:
            return chain
        chain.append(following)


def _atom_holds(region: Region, atom) -> bool:
    part = region.intpart(atom.clock)
    bound = atom.bound
    assert bound <= region.bounds[region.clocks.index(atom.clock)], (
        f"guard constant {bound} exceeds the clock bound of {atom.clock}"
    )
    if part is None:
        return atom.op in (">", ">=")
    if region.is_integral(atom.clock):
        return atom.holds(part)
    # part < value < part + 1
    if atom.op == "=":
        return False
    if atom.op in ("<", "<="):
        return part < bound
    return part >= bound


def satisfies(region: Region, guard: Guard) -> bool:
    return all(_atom_holds(region, atom) for atom in guard.atoms)


def reset(region: Region, resets) -> Region:
    resets = frozenset(resets) & frozenset(region.clocks)
    if not resets:
        return region
    intparts = tuple(
        0 if clock in resets else part for clock, part in zip(region.clocks, region.intparts)
    )
    zero = region.fractions[0] | resets
    groups = [group - resets for group in region.fractions[1:]]
    return Region(region.clocks, region.bounds, intparts, (zero, *(group for group in groups if group)))
