from .reduction import Reduction, compute_reduction, reduce_ctr
from .simulation import SimulationRelation, backward_simulation, forward_simulation
