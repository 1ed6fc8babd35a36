from .automaton import RegionState, build_region_automaton, region_steps
from .integer import IntegerRegion, enumerate_integer_regions, zero_integer_region
from .region import Region, region_of, reset, satisfies, successor_chain, time_successor, zero_region
