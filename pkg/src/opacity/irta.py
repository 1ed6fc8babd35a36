import math

from constructions.augment import augment, fresh_clock_name
from regions.automaton import build_region_automaton
from timed.errors import NotIntegerResetError
from timed.model import OpacitySpec, TimedAutomaton, hide_unobservable, non_integer_resets

from .base import BaseVerifier


def region_bounds(model: TimedAutomaton) -> tuple:
    """Bounds on reachable regions and states of the augmented region automaton"""
    kappa = model.kappa.values()
    regions = math.prod(k + 2 for k in kappa) + math.prod(k + 1 for k in kappa)
    states = 4 * len(model.locations) * math.prod(k + 1 for k in kappa)
    return regions, states


class IntegerResetVerifier(BaseVerifier):
    """Current-location timed opacity for automata with integer resets"""

    algorithm = "clto"

    def build_nfa(self, model, spec, stats):
        offending = non_integer_resets(model)
        if offending:
            raise NotIntegerResetError(offending)

        with self.phase(stats, "hide"):
            hidden = hide_unobservable(model, spec)
        clock = fresh_clock_name(hidden, self.phase_clock)
        with self.phase(stats, "augment"):
            augmented = augment(hidden, clock)
        with self.phase(stats, "regions"):
            nfa = build_region_automaton(augmented)

        region_bound, state_bound = region_bounds(model)
        stats.update(
            phase_clock=clock,
            augmented_locations=len(augmented.locations),
            region_states=len(nfa.states),
            regions=len({state.region for state in nfa.states}),
            region_bound=region_bound,
            state_bound=state_bound,
        )
        self.logger.info(
            "📊 augmented region automaton: %d states over %d regions (bounds %d / %d)",
            len(nfa.states), stats["regions"], state_bound, region_bound,
        )
        return nfa


def verify_clto_irta(model: TimedAutomaton, spec: OpacitySpec, phase_clock="c"):
    return IntegerResetVerifier(phase_clock).verify(model, spec)
