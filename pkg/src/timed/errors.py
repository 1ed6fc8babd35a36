class ModelError(ValueError):
    """Raised when a model or opacity specification is not usable"""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = list(diagnostics or [])


class ModelSyntaxError(ModelError):
    """Model file could not be parsed"""

    def __init__(self, message, line, column, token=None):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.token = token


class ReservedSymbolError(ModelError):
    """A reserved spelling (silent label, δ, ✓ or the phase clock) is already in use"""


class NotIntegerResetError(ModelError):
    """The integer-reset procedure was given a model with non-integer resets"""

    def __init__(self, transitions):
        self.transitions = tuple(transitions)
        listing = "; ".join(str(t) for t in self.transitions)
        super().__init__(
            f"not an integer-reset automaton, resetting without an equality atom: {listing}",
            [f"reset without equality atom: {t}" for t in self.transitions],
        )


class MetadataError(ValueError):
    """A state carries no location it could be projected to"""


class WitnessError(ValueError):
    """A witness was requested for a state the DFA cannot reach"""
