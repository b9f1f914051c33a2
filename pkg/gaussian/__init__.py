from .state import (GaussianState, vacuum_state, thermal_state, tensor, reduce, displace,
                    coherent_displacement, mean_photon_number, omega, symplectic_eigenvalues)
from .symplectic import (SymplecticTransform, identity, beamsplitter, two_mode_squeezer,
                         single_mode_squeezer, phase_rotation, apply, embed,
                         symplectic_defect)
from .entropy import g, entropy, conditional_entropy, mutual_information
from .sampling import random_symplectic, random_gaussian_state
