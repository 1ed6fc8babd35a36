import logging

from constructions.augment import augment, fresh_clock_name
from constructions.ctr import build_ctr
from constructions.integral import build_integral_automaton
from fa.automaton import FiniteAutomaton
from regions.automaton import build_region_automaton
from timed.errors import NotIntegerResetError
from timed.model import OpacitySpec, TimedAutomaton, base_location, hide_unobservable, non_integer_resets

from .language import bounded_language

logger = logging.getLogger(__name__)

MODES = {"clto": "clto", "clto-irta": "clto", "clto-idtp": "clto-idtp"}


def observation_automaton(model: TimedAutomaton, spec: OpacitySpec, mode: str, allow_non_irta=False) -> FiniteAutomaton:
    """The automaton the chosen procedure determinizes; the unreduced CTR in discrete-time mode"""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}, expected one of {', '.join(sorted(MODES))}")
    hidden = hide_unobservable(model, spec)
    if MODES[mode] == "clto":
        offending = non_integer_resets(model)
        if offending and not allow_non_irta:
            raise NotIntegerResetError(offending)
        return build_region_automaton(augment(hidden, fresh_clock_name(hidden)))
    return build_integral_automaton(build_ctr(hidden))


def bounded_opacity_refute(model, spec, mode, depth, allow_non_irta=False):
    """Shortest observation of length at most ``depth`` reaching a secret location but no non-secret one.

    Returns the observation as a tuple of symbols, or ``None`` when every
    bounded secret observation is also a non-secret one.
    """
    nfa = observation_automaton(model, spec, mode, allow_non_irta)
    secret = [state for state in nfa.states if base_location(state) in spec.secret]
    nonsecret = [state for state in nfa.states if base_location(state) in spec.nonsecret]

    secret_words = bounded_language(nfa, nfa.initial, secret, depth)
    nonsecret_words = bounded_language(nfa, nfa.initial, nonsecret, depth)
    uncovered = secret_words.shortest_outside(nonsecret_words)
    logger.debug(
        "oracle %s depth %d: %d secret words, %d non-secret words, uncovered %s",
        mode, depth, len(secret_words), len(nonsecret_words), uncovered,
    )
    return uncovered
