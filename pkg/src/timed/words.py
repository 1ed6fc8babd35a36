import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .model import OpacitySpec

_EVENT = re.compile(r"\(\s*([^,()\s]+)\s*,\s*([0-9]+(?:\.[0-9]+)?(?:/[0-9]+)?)\s*\)")


def format_time(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    # terminating decimals print as decimals, everything else as p/q
    denominator = value.denominator
    for prime in (2, 5):
        while denominator % prime == 0:
            denominator //= prime
    if denominator == 1:
        digits = 0
        scaled = value
        while scaled.denominator != 1:
            scaled *= 10
            digits += 1
        whole, rest = divmod(scaled.numerator, 10 ** digits)
        return f"{whole}.{rest:0{digits}d}"
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class TimedWord:
    """Sequence of (symbol, timestamp) pairs with exact, non-decreasing timestamps"""

    events: tuple = ()

    def __post_init__(self):
        events = tuple((symbol, Fraction(time)) for symbol, time in self.events)
        previous = Fraction(0)
        for symbol, time in events:
            if time < 0:
                raise ValueError(f"negative timestamp {time} for {symbol}")
            if time < previous:
                raise ValueError(f"timestamps must be non-decreasing, {time} after {previous}")
            previous = time
        object.__setattr__(self, "events", events)

    @classmethod
    def parse(cls, text: str) -> "TimedWord":
        """Parse ``(a,0.5)(b,1)``; decimals and p/q literals are converted exactly"""
        text = text.strip()
        events, position = [], 0
        for match in _EVENT.finditer(text):
            if text[position:match.start()].strip():
                raise ValueError(f"unexpected text at offset {position}: {text[position:match.start()]!r}")
            events.append((match.group(1), Fraction(match.group(2))))
            position = match.end()
        if text[position:].strip():
            raise ValueError(f"unexpected text at offset {position}: {text[position:]!r}")
        return cls(tuple(events))

    @property
    def symbols(self) -> tuple:
        return tuple(symbol for symbol, _ in self.events)

    @property
    def timestamps(self) -> tuple:
        return tuple(time for _, time in self.events)

    @property
    def is_integral(self) -> bool:
        return all(time.denominator == 1 for time in self.timestamps)

    def __len__(self):
        return len(self.events)

    def __iter__(self):
        return iter(self.events)

    def __str__(self):
        return "".join(f"({symbol},{format_time(time)})" for symbol, time in self.events)


def project(word: TimedWord, spec) -> TimedWord:
    """Drop events whose symbol is not observable"""
    observable = spec.observable if isinstance(spec, OpacitySpec) else frozenset(spec)
    return TimedWord(tuple(event for event in word.events if event[0] in observable))


def shift(word: TimedWord, threshold) -> TimedWord:
    """Round each timestamp down when its fractional part is at most the threshold, up otherwise"""
    threshold = Fraction(threshold)
    events = []
    for symbol, time in word.events:
        whole = math.floor(time)
        events.append((symbol, whole if time - whole <= threshold else math.ceil(time)))
    return TimedWord(tuple(events))


def digitize(word: TimedWord) -> frozenset:
    """Every shifted copy of ``word`` over thresholds in [0, 1).

    Shifting is constant between consecutive fractional parts, so the
    fractional parts themselves (and 0) are enough representatives.
    """
    thresholds = {Fraction(0)} | {time - math.floor(time) for time in word.timestamps}
    return frozenset(shift(word, threshold) for threshold in sorted(thresholds))
