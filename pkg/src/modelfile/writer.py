from timed.model import EPSILON, OpacitySpec, TimedAutomaton, order_key


def _listing(key, names):
    names = list(names)
    return f"{key}: {', '.join(str(name) for name in names)}" if names else f"{key}:"


def serialize(model: TimedAutomaton, spec: OpacitySpec = None) -> str:
    """Model text that :func:`modelfile.parser.parse_model` reads back to the same model.

    Constructed automata (phased or region locations, silent moves) are
    written in the same layout for inspection but do not parse back.
    """
    spec = spec or OpacitySpec()
    lines = [
        _listing("alphabet", sorted(model.alphabet)),
        _listing("clocks", model.clocks),
        _listing("locations", model.locations),
        _listing("initial", sorted(model.initial, key=order_key)),
        _listing("accepting", sorted(model.accepting, key=order_key)),
        _listing("secret", sorted(spec.secret, key=order_key)),
        _listing("nonsecret", sorted(spec.nonsecret, key=order_key)),
        _listing("observable", sorted(spec.observable)),
        "transitions:",
    ]
    for transition in model.transitions:
        label = "ε" if transition.label == EPSILON else transition.label
        resets = ", ".join(sorted(transition.resets))
        lines.append(f"  {transition.source} --{label} [{transition.guard}] {{{resets}}}--> {transition.target}")
    return "\n".join(lines) + "\n"
