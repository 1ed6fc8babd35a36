import logging
import time
from abc import ABC, abstractmethod
from contextlib import contextmanager

from fa.automaton import FiniteAutomaton, mark_secrets, project_locations
from fa.determinize import determinize
from timed.errors import ModelError
from timed.model import OpacitySpec, TimedAutomaton, validate

from .verdict import Verdict
from .witness import extract_witness


class BaseVerifier(ABC):
    """Base class for the current-location opacity procedures.

    Subclasses build the nondeterministic automaton whose states carry
    locations; this class determinizes it and looks for a reachable subset
    that touches a secret location and no non-secret one.
    """

    algorithm = None

    def __init__(self, phase_clock="c"):
        self.phase_clock = phase_clock
        self.logger = logging.getLogger(__name__)

    @abstractmethod
    def build_nfa(self, model: TimedAutomaton, spec: OpacitySpec, stats: dict) -> FiniteAutomaton:
        """Build the automaton to determinize, recording sizes and bounds into ``stats``"""
        pass

    @contextmanager
    def phase(self, stats: dict, name: str):
        started = time.perf_counter()
        yield
        elapsed = (time.perf_counter() - started) * 1000
        stats.setdefault("timings_ms", {})[name] = round(elapsed, 3)
        self.logger.debug("⏱️ %s %s took %.3f ms", self.algorithm, name, elapsed)

    def verify(self, model: TimedAutomaton, spec: OpacitySpec) -> Verdict:
        diagnostics = validate(model, spec)
        if diagnostics:
            raise ModelError("invalid model: " + "; ".join(diagnostics), diagnostics)

        stats = {}
        nfa = mark_secrets(self.build_nfa(model, spec, stats), spec)
        stats["nfa_states"] = len(nfa.states)
        stats["nfa_edges"] = len(nfa.edges)

        with self.phase(stats, "determinize"):
            dfa = determinize(nfa)
        stats["dfa_states"] = len(dfa.states)
        stats["dfa_edges"] = len(dfa.edges)

        violating = None
        with self.phase(stats, "scan"):
            for subset in dfa.states:
                locations = project_locations(subset)
                if locations & spec.secret and not locations & spec.nonsecret:
                    violating = subset
                    break

        if violating is None:
            self.logger.info("✅ %s: opaque (%d subsets checked)", self.algorithm, len(dfa.states))
            return Verdict(self.algorithm, True, None, stats)

        witness = extract_witness(dfa, violating, spec)
        self.logger.info(
            "❌ %s: not opaque, observation %s reaches %s",
            self.algorithm, " ".join(witness.observation) or "ε", violating,
        )
        return Verdict(self.algorithm, False, witness, stats)
