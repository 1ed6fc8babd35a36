import math
import random
from fractions import Fraction

from timed.model import EPSILON, TimedAutomaton, order_key
from timed.words import TimedWord


def _delay_options(valuation, kappa, rng) -> list:
    """One delay per region reachable by letting time pass from ``valuation``"""
    critical = {Fraction(0)}
    for clock, value in valuation.items():
        for whole in range(math.floor(value) + 1, kappa[clock] + 2):
            critical.add(Fraction(whole) - value)
    points = sorted(critical)
    options = list(points)
    for low, high in zip(points, points[1:]):
        options.append(low + (high - low) * Fraction(rng.randint(1, 99), 100))
    options.append(points[-1] + Fraction(rng.randint(1, 200), 100))
    return sorted(options)


def random_timed_run(model: TimedAutomaton, max_steps: int, seed=0):
    """Sample a concrete run; returns the timed word of its visible events and the final location.

    Silent moves take time but leave no event. A run stops early when no
    transition can be taken after any delay.
    """
    rng = random.Random(seed)
    location = rng.choice(sorted(model.initial, key=order_key))
    valuation = {clock: Fraction(0) for clock in model.clocks}
    now = Fraction(0)
    events = []

    for _ in range(max_steps):
        choices = []
        for delay in _delay_options(valuation, model.kappa, rng):
            later = {clock: value + delay for clock, value in valuation.items()}
            for transition in model.outgoing.get(location, ()):
                if transition.guard.holds(later):
                    choices.append((delay, transition))
        if not choices:
            break
        delay, transition = rng.choice(choices)
        now += delay
        valuation = {
            clock: Fraction(0) if clock in transition.resets else value + delay
            for clock, value in valuation.items()
        }
        location = transition.target
        if transition.label != EPSILON:
            events.append((transition.label, now))

    return TimedWord(tuple(events)), location
