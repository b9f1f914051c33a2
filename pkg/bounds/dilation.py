import collections
import logging
import math

from errors import DomainError
from gaussian import (beamsplitter, two_mode_squeezer, single_mode_squeezer, phase_rotation,
                      apply, tensor, vacuum_state, thermal_state, displace, coherent_displacement,
                      conditional_entropy)
from .channel import LOSS_THEN_AMP

logger = logging.getLogger(__name__)

INPUT = "A"
LOSS_ENV = "env1"
AMP_ENV = "env2"
LOSS_SQUASH = "F1"
AMP_SQUASH = "F2"

# Working label -> output role once the chain has run
ROLES = collections.OrderedDict([
    (INPUT, "B"),
    (LOSS_ENV, "E1'"),
    (AMP_ENV, "E2'"),
    (LOSS_SQUASH, "F1'"),
    (AMP_SQUASH, "F2'"),
])

ObjectiveValue = collections.namedtuple("ObjectiveValue", ["h_be", "h_bf"])


class DilationChain(object):
    """
    Isometric extension of a decomposed channel followed by two squashing
    beamsplitters. `steps` is a list of (transform, target labels) applied in
    order to the input mode tensored with four vacuum ancillas.
    """

    def __init__(self, decomposition, steps, eta2, eta3):
        self.decomposition = decomposition
        self.steps = list(steps)
        self.eta2 = eta2
        self.eta3 = eta3
        self.ancillas = [LOSS_ENV, AMP_ENV, LOSS_SQUASH, AMP_SQUASH]
        self.roles = ROLES

    @property
    def num_modes(self):
        return 1 + len(self.ancillas)

    def run(self, state):
        """Feed a single-mode state through the chain; output modes carry role labels"""
        if state.num_modes != 1:
            raise DomainError("Dilation chains take a single-mode input, got {}".format(state.num_modes))
        state = tensor(state.with_labels([INPUT]), vacuum_state(len(self.ancillas), self.ancillas))
        for transform, targets in self.steps:
            state = apply(transform, state, targets)
        return state.with_labels([self.roles[label] for label in state.labels])

    def __repr__(self):
        return "DilationChain({!r}, eta2={:g}, eta3={:g})".format(
            self.decomposition, self.eta2, self.eta3)


def build_dilation(decomposition, eta2=0.5, eta3=0.5):
    for name, value in (("eta2", eta2), ("eta3", eta3)):
        if not 0.0 < value < 1.0:
            raise DomainError("Squashing transmissivity {} must lie in (0, 1), got {}".format(name, value))
    loss = (beamsplitter(decomposition.T), [INPUT, LOSS_ENV])
    amp = (two_mode_squeezer(decomposition.G), [INPUT, AMP_ENV])
    steps = [loss, amp] if decomposition.order == LOSS_THEN_AMP else [amp, loss]
    steps += [
        (beamsplitter(eta2), [LOSS_ENV, LOSS_SQUASH]),
        (beamsplitter(eta3), [AMP_ENV, AMP_SQUASH]),
    ]
    return DilationChain(decomposition, steps, eta2, eta3)


def evaluate_objective_state(chain, state):
    out = chain.run(state)
    h_be = conditional_entropy(out, ["B"], ["E1'", "E2'"])
    h_bf = conditional_entropy(out, ["B"], ["F1'", "F2'"])
    return ObjectiveValue(h_be, h_bf)


def evaluate_objective(chain, ns):
    """H(B|E1'E2') and H(B|F1'F2') for a thermal input with ns photons"""
    if not ns >= 0.0:
        raise DomainError("Mean input photon number must be >= 0, got {}".format(ns))
    value = evaluate_objective_state(chain, thermal_state(ns, INPUT))
    logger.debug("%r at ns=%g: %s", chain, ns, value)
    return value


def random_energy_constrained_input(ns, rng):
    """
    Displaced, squeezed, rotated thermal state with mean photon number at
    most `ns`, drawn by splitting a random photon budget between the
    displacement, the squeezing and the thermal part.
    """
    if not ns >= 0.0:
        raise DomainError("Mean input photon number must be >= 0, got {}".format(ns))
    total = rng.uniform() * ns
    squeezed = rng.uniform() * total
    coherent = total - squeezed
    thermal = rng.uniform() * squeezed
    r = 0.5 * math.acosh((2.0 * squeezed + 1.0) / (2.0 * thermal + 1.0))

    state = thermal_state(thermal, INPUT)
    state = apply(single_mode_squeezer(r), state, [INPUT])
    state = apply(phase_rotation(rng.uniform(0.0, 2.0 * math.pi)), state, [INPUT])
    theta = rng.uniform(0.0, 2.0 * math.pi)
    alpha = math.sqrt(coherent) * complex(math.cos(theta), math.sin(theta))
    dx, dp = coherent_displacement(alpha)
    return displace(state, INPUT, dx, dp)
