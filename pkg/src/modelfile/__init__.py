from .parser import load_model, parse_model
from .writer import serialize
