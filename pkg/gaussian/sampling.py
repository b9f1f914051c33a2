import math

import numpy as np

from errors import DomainError
from .state import GaussianState, thermal_state, tensor
from .symplectic import (SymplecticTransform, beamsplitter, two_mode_squeezer, single_mode_squeezer,
                         phase_rotation, embed)

MAX_GAIN = 1.5
MAX_SQUEEZE = 0.25


def random_symplectic(n, rng, layers=2):
    """
    Product of `layers` rounds of random gates over n modes: per round a
    rotation and a squeezer on every mode, then a beamsplitter and a
    two-mode squeezer on random pairs. Gains and squeezing stay moderate.
    """
    if n < 1:
        raise DomainError("random_symplectic needs n >= 1, got {}".format(n))
    full = np.eye(2 * n)
    for _ in range(layers):
        for k in range(n):
            full = embed(phase_rotation(rng.uniform(0.0, 2.0 * math.pi)), n, [k]) @ full
            full = embed(single_mode_squeezer(rng.uniform(-MAX_SQUEEZE, MAX_SQUEEZE)), n, [k]) @ full
        if n > 1:
            i, j = rng.choice(n, size=2, replace=False)
            full = embed(beamsplitter(rng.uniform()), n, [i, j]) @ full
            i, j = rng.choice(n, size=2, replace=False)
            full = embed(two_mode_squeezer(rng.uniform(1.0, MAX_GAIN)), n, [i, j]) @ full
    return SymplecticTransform(full, "random({})".format(n))


def random_gaussian_state(n, rng, max_photons=2.0, labels=None, pure=False):
    """Random symplectic applied to a product of thermal (or vacuum) modes"""
    modes = [thermal_state(0.0 if pure else rng.uniform(0.0, max_photons), "m{}".format(k))
             for k in range(n)]
    state = modes[0]
    for mode in modes[1:]:
        state = tensor(state, mode)
    s = random_symplectic(n, rng).matrix
    mean = rng.normal(size=2 * n)
    return GaussianState(mean, s @ state.cov @ s.T, labels)
