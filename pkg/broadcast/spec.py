import collections
import itertools
import logging
import math

from errors import DomainError
from gaussian import (g, beamsplitter, apply, tensor, thermal_state, vacuum_state, entropy,
                      conditional_entropy)

logger = logging.getLogger(__name__)

MAX_RECEIVERS = 16
SUM_TOL = 1e-12
SENDER = "S"
EVE = "E1"
EVE_SQUASH = "E2"


class BroadcastSpec(object):
    """Pure-loss broadcast channel: receiver name -> transmissivity, Eve keeps the rest"""

    def __init__(self, receivers):
        receivers = collections.OrderedDict(
            (str(name), float(eta)) for name, eta in dict(receivers).items())
        if not receivers:
            raise DomainError("A broadcast channel needs at least one receiver")
        for name, eta in receivers.items():
            if not 0.0 <= eta <= 1.0:
                raise DomainError("Receiver {} transmissivity {} outside [0, 1]".format(name, eta))
            if name in (SENDER, EVE, EVE_SQUASH):
                raise DomainError("Receiver name '{}' is reserved".format(name))
        total = sum(receivers.values())
        if total > 1.0 + SUM_TOL:
            raise DomainError("Receiver transmissivities sum to {} > 1".format(total))
        self.receivers = receivers

    @classmethod
    def from_pairs(cls, pairs):
        """Parse ["B=0.3", "C=0.4"]"""
        receivers = collections.OrderedDict()
        for pair in pairs:
            name, sep, value = pair.partition("=")
            name = name.strip()
            if not sep or not name:
                raise DomainError("Expected NAME=eta, got '{}'".format(pair))
            if name in receivers:
                raise DomainError("Receiver '{}' given twice".format(name))
            try:
                receivers[name] = float(value)
            except ValueError:
                raise DomainError("Invalid transmissivity in '{}'".format(pair))
        return cls(receivers)

    @property
    def names(self):
        return list(self.receivers)

    @property
    def eta_total(self):
        return min(1.0, sum(self.receivers.values()))

    @property
    def eta_eve(self):
        return max(0.0, 1.0 - self.eta_total)

    def split(self, subset):
        """(eta_T, eta_Tbar) for a non-empty receiver subset"""
        subset = list(subset)
        if not subset:
            raise DomainError("Receiver subset must be non-empty")
        unknown = [name for name in subset if name not in self.receivers]
        if unknown:
            raise DomainError("Unknown receiver(s) {}".format(unknown))
        if len(set(subset)) != len(subset):
            raise DomainError("Repeated receivers in {}".format(subset))
        eta_t = sum(self.receivers[name] for name in subset)
        return eta_t, max(0.0, self.eta_total - eta_t)

    def __repr__(self):
        return "BroadcastSpec({})".format(dict(self.receivers))


def broadcast_bound(spec, subset, ns):
    if not ns >= 0.0:
        raise DomainError("Mean input photon number must be >= 0, got {}".format(ns))
    eta_t, eta_tbar = spec.split(subset)
    upper = ns * (1.0 + eta_t - eta_tbar) / 2.0
    lower = max(0.0, ns * (1.0 - eta_t - eta_tbar) / 2.0)
    return max(0.0, g(upper) - g(lower))


def broadcast_bound_limit(spec, subset):
    eta_t, eta_tbar = spec.split(subset)
    if eta_t + eta_tbar >= 1.0:
        return math.inf
    return math.log2((1.0 + eta_t - eta_tbar) / (1.0 - eta_t - eta_tbar))


def subsets(names):
    """Non-empty subsets ordered by size, then by receiver order"""
    for size in range(1, len(names) + 1):
        for combo in itertools.combinations(names, size):
            yield combo


def broadcast_region(spec, ns):
    names = spec.names
    if len(names) > MAX_RECEIVERS:
        raise DomainError("Region enumeration is limited to {} receivers, got {}".format(
            MAX_RECEIVERS, len(names)))
    region = collections.OrderedDict()
    for subset in subsets(names):
        region[subset] = broadcast_bound(spec, subset, ns)
    logger.info("Enumerated %d receiver subsets", len(region))
    return region


def cascade_transmissivities(spec):
    """
    Beamsplitter transmissivities t_i of the left-to-right chain: at stage i
    the carried mode keeps a fraction t_i and receiver i gets the rest, so
    receiver i ends up with exactly its transmissivity. Whatever is left
    after the last stage goes to Eve.
    """
    remaining = 1.0
    ts = []
    for eta in spec.receivers.values():
        if remaining <= 0.0:
            ts.append(1.0)
            continue
        t = min(1.0, max(0.0, 1.0 - eta / remaining))
        ts.append(t)
        remaining = max(0.0, remaining - eta)
    return ts


def broadcast_output(spec, input_state):
    """Output state over receivers, Eve's squashed mode E1 and its complement E2"""
    if input_state.num_modes != 1:
        raise DomainError("The sender transmits a single mode")
    names = spec.names
    state = tensor(input_state.with_labels([SENDER]), vacuum_state(len(names) + 1, names + [EVE_SQUASH]))
    for name, t in zip(names, cascade_transmissivities(spec)):
        state = apply(beamsplitter(t), state, [SENDER, name])
    state = apply(beamsplitter(0.5), state, [SENDER, EVE_SQUASH])
    return state.with_labels([EVE if label == SENDER else label for label in state.labels])


def broadcast_gaussian_check(spec, subset, ns):
    """H(T E1) - H(E1) evaluated on the cascade output"""
    spec.split(subset)
    if not ns >= 0.0:
        raise DomainError("Mean input photon number must be >= 0, got {}".format(ns))
    state = broadcast_output(spec, thermal_state(ns, SENDER))
    return entropy(state, list(subset) + [EVE]) - entropy(state, [EVE])


def broadcast_objective_state(spec, subset, input_state):
    """Half the sum of H(T|E1) and H(T|E2) for an arbitrary single-mode input"""
    spec.split(subset)
    state = broadcast_output(spec, input_state)
    subset = list(subset)
    return 0.5 * (conditional_entropy(state, subset, [EVE])
                  + conditional_entropy(state, subset, [EVE_SQUASH]))
