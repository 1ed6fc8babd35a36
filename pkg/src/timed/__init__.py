from .errors import (
    MetadataError,
    ModelError,
    ModelSyntaxError,
    NotIntegerResetError,
    ReservedSymbolError,
    WitnessError,
)
from .model import (
    DELTA,
    EPSILON,
    RESERVED,
    TICK,
    AtomicConstraint,
    Guard,
    LocationLayer,
    OpacitySpec,
    TimedAutomaton,
    Transition,
    base_location,
    check_integer_resets,
    hide_unobservable,
    non_integer_resets,
    order_key,
    validate,
)
from .words import TimedWord, digitize, project, shift
