import itertools
from dataclasses import dataclass
from typing import Mapping

from timed.model import Guard


@dataclass(frozen=True)
class IntegerRegion:
    """Region of an integer valuation, each clock clipped at its bound plus one"""

    clocks: tuple
    bounds: tuple
    values: tuple

    def value(self, clock) -> int:
        return self.values[self.clocks.index(clock)]

    def satisfies(self, guard: Guard) -> bool:
        for atom in guard.atoms:
            assert atom.bound <= self.bounds[self.clocks.index(atom.clock)], (
                f"guard constant {atom.bound} exceeds the clock bound of {atom.clock}"
            )
            if not atom.holds(self.value(atom.clock)):
                return False
        return True

    def tick(self) -> "IntegerRegion":
        values = tuple(min(value + 1, bound + 1) for value, bound in zip(self.values, self.bounds))
        return IntegerRegion(self.clocks, self.bounds, values)

    def reset(self, resets) -> "IntegerRegion":
        values = tuple(0 if clock in resets else value for clock, value in zip(self.clocks, self.values))
        return IntegerRegion(self.clocks, self.bounds, values)

    def sort_key(self) -> tuple:
        return self.values

    def describe(self) -> str:
        if not self.clocks:
            return "true"
        return ",".join(
            f"{clock}>{bound}" if value > bound else f"{clock}={value}"
            for clock, bound, value in zip(self.clocks, self.bounds, self.values)
        )

    def __str__(self):
        return self.describe()


def zero_integer_region(kappa: Mapping[str, int]) -> IntegerRegion:
    clocks = tuple(kappa)
    return IntegerRegion(clocks, tuple(kappa[clock] for clock in clocks), (0,) * len(clocks))


def enumerate_integer_regions(kappa: Mapping[str, int]) -> frozenset:
    clocks = tuple(kappa)
    bounds = tuple(kappa[clock] for clock in clocks)
    return frozenset(
        IntegerRegion(clocks, bounds, values)
        for values in itertools.product(*(range(bound + 2) for bound in bounds))
    )
