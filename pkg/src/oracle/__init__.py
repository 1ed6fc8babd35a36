from .grid import digitize_grid
from .language import BoundedLanguage, accepted_language, bounded_language
from .refute import bounded_opacity_refute, observation_automaton
from .runs import random_timed_run
