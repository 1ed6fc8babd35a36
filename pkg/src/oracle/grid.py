from fractions import Fraction

from timed.words import TimedWord


def _shift_at(time: Fraction, threshold: Fraction) -> int:
    whole = time.numerator // time.denominator
    return whole if time - whole <= threshold else whole + 1


def digitize_grid(word: TimedWord, step) -> frozenset:
    """Shifted copies of ``word`` for thresholds 0, step, 2*step, ... below 1"""
    step = Fraction(step)
    if not 0 < step < 1:
        raise ValueError(f"grid step must lie in (0, 1), got {step}")
    results, threshold = set(), Fraction(0)
    while threshold < 1:
        results.add(TimedWord(tuple((symbol, _shift_at(time, threshold)) for symbol, time in word)))
        threshold += step
    return frozenset(results)
