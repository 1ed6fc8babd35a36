from .automaton import (
    Edge,
    FiniteAutomaton,
    SubsetState,
    epsilon_closure,
    mark_secrets,
    project_locations,
)
from .determinize import determinize
from .dot import export_dot, export_ta_dot, write_dot
