#!/usr/bin/env python3

import argparse
import json
import logging
import os
import sys
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from constructions.augment import augment, fresh_clock_name
from constructions.ctr import build_ctr
from constructions.integral import build_integral_automaton
from fa.automaton import mark_secrets
from fa.determinize import determinize
from fa.dot import export_dot, export_ta_dot, write_dot
from modelfile.parser import load_model
from modelfile.writer import serialize
from opacity.idtp import DiscreteTimeVerifier
from opacity.irta import IntegerResetVerifier
from opacity.witness import decode_observation
from oracle.grid import digitize_grid
from oracle.refute import bounded_opacity_refute
from oracle.runs import random_timed_run
from reduction.reduction import compute_reduction
from regions.automaton import build_region_automaton
from timed.errors import ModelError
from timed.model import EPSILON, hide_unobservable, non_integer_resets
from timed.words import TimedWord, digitize
from utils.config import Config
from utils.logger import get_logger

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2

DUMP_KINDS = ("regions", "augment", "ctr", "reduced", "integral", "dfa")
MODES = ("clto", "clto-idtp")


class OpacityToolkit:
    def __init__(self, config=None):
        """Initialize the command-line toolkit"""
        self.config = config or Config()
        get_logger('', self.config.logging)
        self.logger = logging.getLogger('opacity.cli')

    # ------------------------------------------------------------ #
    def build_parser(self):
        parser = argparse.ArgumentParser(
            prog='opacity',
            description='Current-location timed opacity checks for timed automata',
        )
        commands = parser.add_subparsers(dest='command', required=True)

        check = commands.add_parser('check-irta', help='test whether every reset happens under an equality guard')
        check.add_argument('file')

        verify = commands.add_parser('verify', help='decide opacity of a model')
        verify.add_argument('mode', choices=MODES)
        verify.add_argument('file')
        verify.add_argument('--format', choices=('text', 'json'), default=None)

        dump = commands.add_parser('dump', help='print or export an intermediate construction')
        dump.add_argument('kind', choices=DUMP_KINDS)
        dump.add_argument('file')
        dump.add_argument('--dot', metavar='OUT', help='write Graphviz DOT to OUT instead of printing')
        dump.add_argument('--mode', choices=MODES, default='clto', help='pipeline whose DFA is dumped')

        oracle = commands.add_parser('oracle', help='brute-force cross-checks')
        checks = oracle.add_subparsers(dest='check', required=True)
        refute = checks.add_parser('refute', help='search bounded observations for an opacity violation')
        refute.add_argument('file')
        refute.add_argument('--mode', choices=MODES + ('clto-irta',), default='clto')
        refute.add_argument('--depth', type=int, default=None)
        refute.add_argument('--allow-non-irta', action='store_true')
        run = checks.add_parser('run', help='sample a concrete timed run')
        run.add_argument('file')
        run.add_argument('--steps', type=int, default=5)
        run.add_argument('--seed', type=int, default=None)

        digit = commands.add_parser('digitize', help='all integer roundings of a timed word')
        digit.add_argument('word', help='e.g. "(a,0.5)(b,1)"')
        digit.add_argument('--grid', metavar='STEP', default=None, help='threshold step of the cross-checking grid sweep')
        return parser

    def run(self, argv=None) -> int:
        parser = self.build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as err:
            return EXIT_INPUT if err.code else EXIT_OK

        handler = getattr(self, 'cmd_' + args.command.replace('-', '_'))
        try:
            return handler(args)
        except ModelError as err:
            self.logger.error("❌ %s", err)
            for diagnostic in err.diagnostics:
                self.logger.error("   %s", diagnostic)
            return EXIT_INPUT
        except (OSError, ValueError) as err:
            self.logger.error("❌ %s", err)
            return EXIT_INPUT

    # ------------------------------------------------------------ #
    def cmd_check_irta(self, args) -> int:
        model, _ = load_model(args.file)
        offending = non_integer_resets(model)
        if not offending:
            print("integer resets: yes")
            return EXIT_OK
        print("integer resets: no")
        for transition in offending:
            print(f"  {transition}")
        return EXIT_FAIL

    def _verifier(self, mode):
        if mode == 'clto':
            return IntegerResetVerifier(self.config.verify.get('phase_clock', 'c'))
        return DiscreteTimeVerifier()

    def cmd_verify(self, args) -> int:
        model, spec = load_model(args.file)
        self.logger.info("🔍 Verifying %s with %s", args.file, args.mode)
        verdict = self._verifier(args.mode).verify(model, spec)

        report_format = args.format or self.config.app.get('report_format', 'text')
        if report_format == 'json':
            print(json.dumps(verdict.to_dict(), ensure_ascii=False, indent=2))
        else:
            print(self._text_report(verdict))
        return EXIT_OK if verdict.opaque else EXIT_FAIL

    def _text_report(self, verdict) -> str:
        lines = [f"algorithm: {verdict.algorithm}", f"verdict: {verdict.label}"]
        witness = verdict.witness
        if witness is not None:
            lines.append(f"witness: {' '.join(witness.observation) or 'ε'}")
            lines.append(f"timing: {' '.join(str(t) for t in witness.timing) or '-'}")
            lines.append(f"example: {witness.timed_example() or '-'}")
            lines.append(f"violating subset: {witness.violating_subset}")
            lines.append(f"secret locations hit: {', '.join(sorted(map(str, witness.secret_hits)))}")
        lines.append("stats:")
        for key, value in verdict.stats.items():
            if isinstance(value, dict):
                value = ", ".join(f"{name}={amount}" for name, amount in value.items())
            lines.append(f"  {key}: {value}")
        return "\n".join(lines)

    # ------------------------------------------------------------ #
    def cmd_dump(self, args) -> int:
        model, spec = load_model(args.file)
        rankdir = self.config.dot.get('rankdir', 'LR')
        hidden = hide_unobservable(model, spec)
        phase_clock = fresh_clock_name(hidden, self.config.verify.get('phase_clock', 'c'))

        automaton, audit = None, []
        if args.kind == 'augment':
            automaton = augment(hidden, phase_clock)
        elif args.kind == 'ctr':
            automaton = build_ctr(hidden)
        elif args.kind in ('reduced', 'integral'):
            reduction = compute_reduction(build_ctr(hidden))
            automaton = reduction.automaton
            if args.kind == 'reduced':
                audit = reduction.report()

        if automaton is not None and args.kind != 'integral':
            text = export_ta_dot(automaton, spec, rankdir) if args.dot else serialize(automaton, spec)
        else:
            if args.kind == 'regions':
                fa = build_region_automaton(augment(hidden, phase_clock))
            elif args.kind == 'integral':
                fa = build_integral_automaton(automaton)
            else:
                fa = determinize(mark_secrets(self._verifier(args.mode).build_nfa(model, spec, {}), spec))
            fa = mark_secrets(fa, spec) if args.kind != 'dfa' else fa
            text = export_dot(fa, rankdir) if args.dot else self._fa_listing(fa)

        if args.dot:
            path = write_dot(text, args.dot)
            self.logger.info("✅ Wrote %s to %s", args.kind, path)
        else:
            print(text, end='')
        for line in audit:
            print(f"# removed {line}")
        return EXIT_OK

    def _fa_listing(self, fa) -> str:
        lines = [f"states: {len(fa.states)}", f"edges: {len(fa.edges)}"]
        for state in fa.states:
            flags = "".join((
                "i" if state in fa.initial else "-",
                "f" if state in fa.accepting else "-",
                "s" if state in fa.secret else "-",
            ))
            lines.append(f"  [{flags}] {state}")
        for source, label, target in fa.edges:
            lines.append(f"  {source} --{'ε' if label == EPSILON else label}--> {target}")
        return "\n".join(lines) + "\n"

    # ------------------------------------------------------------ #
    def cmd_oracle(self, args) -> int:
        model, spec = load_model(args.file)
        if args.check == 'run':
            seed = args.seed if args.seed is not None else self.config.oracle.get('seed', 0)
            word, location = random_timed_run(model, args.steps, seed)
            print(f"run: {word or 'ε'}")
            print(f"location: {location}")
            return EXIT_OK

        depth = args.depth if args.depth is not None else self.config.oracle.get('depth', 8)
        found = bounded_opacity_refute(model, spec, args.mode, depth, args.allow_non_irta)
        if found is None:
            print(f"no violating observation up to length {depth}")
            return EXIT_OK
        print(f"violating observation: {' '.join(found) or 'ε'}")
        print(f"timing: {' '.join(str(t) for t in decode_observation(found)) or '-'}")
        return EXIT_FAIL

    def cmd_digitize(self, args) -> int:
        word = TimedWord.parse(args.word)
        shifted = digitize(word)
        for item in sorted(shifted, key=lambda w: w.timestamps):
            print(item or 'ε')
        step = Fraction(args.grid or self.config.oracle.get('grid_step', '1/100'))
        grid = digitize_grid(word, step)
        if grid != shifted:
            self.logger.warning("⚠️ Grid sweep with step %s found %d of %d roundings", step, len(grid), len(shifted))
        return EXIT_OK


def main(argv=None) -> int:
    return OpacityToolkit().run(argv)


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        print("\n🛑 Stopped by user")
        sys.exit(1)
