from .augment import FRACTIONAL, INTEGRAL, PhasedLocation, augment, fresh_clock_name
from .ctr import build_ctr
from .integral import build_integral_automaton, decode_tick_word, encode_integral_word
