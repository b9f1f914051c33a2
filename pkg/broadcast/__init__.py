from .spec import (BroadcastSpec, broadcast_bound, broadcast_bound_limit, broadcast_region,
                   cascade_transmissivities, broadcast_output, broadcast_gaussian_check,
                   broadcast_objective_state, subsets, MAX_RECEIVERS)
from .config import BroadcastConfig
