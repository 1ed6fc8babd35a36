import math

from constructions.ctr import build_ctr
from constructions.integral import build_integral_automaton
from reduction.reduction import compute_reduction
from timed.model import OpacitySpec, TimedAutomaton, hide_unobservable

from .base import BaseVerifier


def ctr_bound(model: TimedAutomaton) -> int:
    clocks = len(model.clocks)
    return (
        len(model.locations)
        * math.factorial(clocks)
        * 4 ** clocks
        * math.prod(k + 1 for k in model.kappa.values())
    )


class DiscreteTimeVerifier(BaseVerifier):
    """Current-location timed opacity against an intruder reading integer-rounded timestamps"""

    algorithm = "clto-idtp"

    def build_nfa(self, model, spec, stats):
        with self.phase(stats, "hide"):
            hidden = hide_unobservable(model, spec)
        with self.phase(stats, "ctr"):
            ctr = build_ctr(hidden)
        with self.phase(stats, "reduce"):
            reduction = compute_reduction(ctr)
        with self.phase(stats, "integral"):
            nfa = build_integral_automaton(reduction.automaton)

        stats.update(
            ctr_states=len(ctr.locations),
            ctr_transitions=len(ctr.transitions),
            ctr_bound=ctr_bound(model),
            reduced_states=len(reduction.automaton.locations),
            removed_states=len(reduction.removed),
            integral_states=len(nfa.states),
        )
        self.logger.info(
            "📊 closed region automaton: %d states (bound %d), %d after reduction, %d integral states",
            len(ctr.locations), stats["ctr_bound"], len(reduction.automaton.locations), len(nfa.states),
        )
        return nfa


def verify_clto_idtp(model: TimedAutomaton, spec: OpacitySpec):
    return DiscreteTimeVerifier().verify(model, spec)
