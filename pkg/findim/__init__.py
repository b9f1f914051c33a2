from .state import (DensityOperator, PureStateVector, as_density, partial_trace, tensor, permute,
                    purify, check_isometry, apply_isometry, stinespring, apply_channel, dephase,
                    basis_state, maximally_mixed)
from .measures import (Entropies, entropy, marginal_entropy, relative_entropy, fidelity,
                       trace_distance, mutual_information, conditional_entropy, cqmi,
                       conditional_total_correlation, dual_total_correlation, correlation_sum,
                       continuity_gap)
from .private import (ghz_state, twisting_unitary, private_state, multipartite_private_state,
                      measure_key, tripartite_key_state, key_state_defect,
                      approximate_private_slack)
from .squash import (SquashingChannelParam, identity_squasher, discard_squasher,
                     dephasing_squasher, kraus_from_parameters, esq_upper, multipartite_esq_upper)
from .sampling import (random_pure_state, random_mixed_state, random_isometry, random_unitary,
                       random_kraus)
