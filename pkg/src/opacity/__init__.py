from .base import BaseVerifier
from .idtp import DiscreteTimeVerifier, verify_clto_idtp
from .irta import IntegerResetVerifier, verify_clto_irta
from .verdict import Verdict
from .witness import EventTiming, Witness, decode_observation, extract_witness
