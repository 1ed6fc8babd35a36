"""Reader for the ``.ta`` model format.

    # comment
    alphabet: a, u
    clocks: x
    locations: l0, l1
    initial: l0
    accepting: l0, l1        (optional, defaults to every location)
    secret: l1
    nonsecret:               (optional, empty)
    observable: a            (optional, defaults to the alphabet)
    transitions:
      l0 --a [x=1] {x}--> l1
      l0 --u [true] {}--> l1

Guards are ``true`` or atoms ``clock op constant`` joined by ``&&`` with
``op`` one of ``< <= = >= >``.
"""

import re
from pathlib import Path

from timed.errors import ModelError, ModelSyntaxError, ReservedSymbolError
from timed.model import (
    EPSILON,
    RESERVED,
    AtomicConstraint,
    Guard,
    OpacitySpec,
    TimedAutomaton,
    Transition,
    validate,
)

SECTIONS = ("alphabet", "clocks", "locations", "initial", "accepting", "secret", "nonsecret", "observable")
REQUIRED = ("alphabet", "clocks", "locations", "initial")

_IDENT = re.compile(r"[^\W\d]\w*")
_SECTION = re.compile(r"^(?P<key>\w+)\s*:(?P<value>.*)$")
_TRANSITION = re.compile(
    r"^(?P<source>\S+)\s+--(?P<label>\S+)\s+\[(?P<guard>[^\]]*)\]\s*\{(?P<resets>[^}]*)\}-->\s+(?P<target>\S+)\s*$"
)
_ATOM = re.compile(r"^(?P<clock>[^\s<>=]+)\s*(?P<op><=|>=|<|>|=)\s*(?P<bound>\d+)$")


class _Line:
    def __init__(self, number):
        self.number = number

    def error(self, message, offset=0, token=None, kind=ModelSyntaxError):
        if kind is ModelSyntaxError:
            return ModelSyntaxError(message, self.number, offset + 1, token)
        return kind(f"line {self.number}, column {offset + 1}: {message}")


def _strip_comment(text):
    return text.split("#", 1)[0].rstrip()


def _names(line, value, offset):
    """Comma-separated identifiers with their column offsets"""
    names = []
    cursor = offset
    for chunk in value.split(","):
        start = cursor + len(chunk) - len(chunk.lstrip())
        name = chunk.strip()
        cursor += len(chunk) + 1
        if not name:
            if value.strip():
                raise line.error("empty name in list", start)
            continue
        _identifier(line, name, start)
        names.append((name, start))
    return names


def _identifier(line, name, offset):
    if name in RESERVED:
        raise line.error(f"reserved symbol {name!r}", offset, name, ReservedSymbolError)
    if not _IDENT.fullmatch(name):
        raise line.error(f"invalid identifier {name!r}", offset, name)
    return name


def _guard(line, text, offset):
    if text.strip() in ("", "true"):
        return []
    atoms, cursor = [], offset
    for chunk in text.split("&&"):
        start = cursor + len(chunk) - len(chunk.lstrip())
        cursor += len(chunk) + 2
        match = _ATOM.match(chunk.strip())
        if not match:
            raise line.error(f"malformed clock constraint {chunk.strip()!r}", start, chunk.strip())
        _identifier(line, match.group("clock"), start)
        atoms.append((AtomicConstraint(match.group("clock"), match.group("op"), int(match.group("bound"))), start))
    return atoms


def parse_model(text: str):
    """Parse model text into ``(TimedAutomaton, OpacitySpec)``"""
    sections, transitions = {}, []
    in_transitions = False

    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = _strip_comment(raw)
        if not stripped.strip():
            continue
        line = _Line(number)
        indent = len(stripped) - len(stripped.lstrip())

        section = _SECTION.match(stripped.strip()) if indent == 0 else None
        if section:
            key = section.group("key")
            if key == "transitions":
                if section.group("value").strip():
                    raise line.error("transitions are listed on the following lines", stripped.index(":") + 1)
                in_transitions = True
                continue
            if key not in SECTIONS:
                raise line.error(f"unknown section {key!r}", 0, key)
            if key in sections:
                raise line.error(f"duplicate section {key!r}", 0, key)
            in_transitions = False
            offset = stripped.index(":") + 1
            sections[key] = [(name, start, line) for name, start in _names(line, section.group("value"), offset)]
            continue

        if not in_transitions:
            raise line.error("expected 'section: values'", indent, stripped.strip())
        transitions.append(_transition(line, stripped, indent))

    for key in REQUIRED:
        if key not in sections:
            raise ModelSyntaxError(f"missing section {key!r}", 1, 1, key)
    return _assemble(sections, transitions)


def _transition(line, text, indent):
    body = text[indent:]
    match = _TRANSITION.match(body)
    if not match:
        raise line.error("malformed transition, expected 'src --label [guard] {resets}--> dst'", indent, body)

    def at(group):
        return indent + match.start(group)

    source = (_identifier(line, match.group("source"), at("source")), at("source"))
    label = match.group("label")
    if label == EPSILON:
        raise line.error(f"reserved symbol {label!r}", at("label"), label, ReservedSymbolError)
    label = (_identifier(line, label, at("label")), at("label"))
    guard = _guard(line, match.group("guard"), at("guard"))
    resets = _names(line, match.group("resets"), at("resets"))
    target = (_identifier(line, match.group("target"), at("target")), at("target"))
    return line, source, label, guard, resets, target


def _assemble(sections, transitions):
    def names(key):
        return [name for name, _, _ in sections.get(key, [])]

    alphabet = names("alphabet")
    clocks = names("clocks")
    locations = names("locations")

    def check(line, name, offset, declared, what):
        if name not in declared:
            raise line.error(f"undeclared {what} {name!r}", offset, name)

    built = []
    for line, (source, source_at), (label, label_at), guard, resets, (target, target_at) in transitions:
        check(line, source, source_at, locations, "location")
        check(line, target, target_at, locations, "location")
        check(line, label, label_at, alphabet, "label")
        atoms = []
        for atom, atom_at in guard:
            check(line, atom.clock, atom_at, clocks, "clock")
            atoms.append(atom)
        for clock, clock_at in resets:
            check(line, clock, clock_at, clocks, "clock")
        built.append(Transition(source, label, Guard(tuple(atoms)), frozenset(c for c, _ in resets), target))

    for key in ("initial", "accepting", "secret", "nonsecret"):
        for name, offset, line in sections.get(key, []):
            check(line, name, offset, locations, "location")
    for name, offset, line in sections.get("observable", []):
        check(line, name, offset, alphabet, "label")

    model = TimedAutomaton(
        alphabet=frozenset(alphabet),
        locations=tuple(locations),
        initial=frozenset(names("initial")),
        accepting=frozenset(names("accepting") if "accepting" in sections else locations),
        clocks=tuple(clocks),
        transitions=tuple(built),
    )
    spec = OpacitySpec(
        observable=frozenset(names("observable") if "observable" in sections else alphabet),
        secret=frozenset(names("secret")),
        nonsecret=frozenset(names("nonsecret")),
    )
    diagnostics = validate(model, spec)
    if diagnostics:
        raise ModelError("invalid model: " + "; ".join(diagnostics), diagnostics)
    return model, spec


def load_model(path):
    return parse_model(Path(path).read_text(encoding="utf-8"))
