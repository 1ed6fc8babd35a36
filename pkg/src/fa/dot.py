from pathlib import Path

from timed.model import EPSILON, OpacitySpec, TimedAutomaton, base_location, order_key

from .automaton import FiniteAutomaton, SubsetState


def _gvquote(text):
    return '"{}"'.format(str(text).replace("\\", "\\\\").replace('"', r"\""))


def _label(symbol):
    return "ε" if symbol == EPSILON else symbol


def _state_label(state):
    if isinstance(state, SubsetState):
        return "\\n".join(_state_label(member) for member in state)
    region = getattr(state, "region", None)
    if region is not None:
        return f"{state.location}|{region.describe()}"
    return str(state)


def _graphviz(fa: FiniteAutomaton, rankdir):
    yield "digraph automaton {\n"
    yield f"  rankdir={rankdir};\n"
    if not fa.states:
        yield "}\n"
        return
    yield "  node [shape=circle];\n"
    names = {state: f"n{index}" for index, state in enumerate(fa.states)}
    for state in fa.states:
        attributes = [f"label={_gvquote(_state_label(state))}"]
        if state in fa.accepting:
            attributes.append("shape=doublecircle")
        if state in fa.secret:
            attributes.append('style=filled fillcolor="lightgrey"')
        yield f"  {names[state]} [{' '.join(attributes)}];\n"
    for index, state in enumerate(s for s in fa.states if s in fa.initial):
        yield f"  start{index} [shape=point];\n"
        yield f"  start{index} -> {names[state]};\n"
    for source, label, target in fa.edges:
        yield f"  {names[source]} -> {names[target]} [label={_gvquote(_label(label))}];\n"
    yield "}\n"


def export_dot(fa: FiniteAutomaton, rankdir="LR") -> str:
    """DOT text for ``fa``; node order follows ``fa.states`` so output is stable"""
    return "".join(_graphviz(fa, rankdir))


def export_ta_dot(model: TimedAutomaton, spec: OpacitySpec = None, rankdir="LR") -> str:
    secret = spec.secret if spec is not None else frozenset()
    lines = ["digraph automaton {\n", f"  rankdir={rankdir};\n"]
    if model.locations:
        lines.append("  node [shape=circle];\n")
    names = {location: f"n{index}" for index, location in enumerate(model.locations)}
    for location in model.locations:
        attributes = [f"label={_gvquote(_state_label(location))}"]
        if location in model.accepting:
            attributes.append("shape=doublecircle")
        if base_location(location) in secret:
            attributes.append('style=filled fillcolor="lightgrey"')
        lines.append(f"  {names[location]} [{' '.join(attributes)}];\n")
    for index, location in enumerate(sorted(model.initial, key=order_key)):
        lines.append(f"  start{index} [shape=point];\n")
        lines.append(f"  start{index} -> {names[location]};\n")
    for transition in model.transitions:
        resets = ", ".join(sorted(transition.resets))
        label = f"{_label(transition.label)} [{transition.guard}] {{{resets}}}"
        lines.append(f"  {names[transition.source]} -> {names[transition.target]} [label={_gvquote(label)}];\n")
    lines.append("}\n")
    return "".join(lines)


def write_dot(text: str, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    return path
