import collections
import math

from bounds import random_energy_constrained_input
from broadcast import (BroadcastSpec, broadcast_bound, broadcast_bound_limit,
                       broadcast_gaussian_check, broadcast_objective_state)
from gaussian import thermal_state
from suite import Suite, invariant
from utils import grid

INPUTS_PER_CHANNEL = 20
NAMES = ["B", "C", "D", "F"]


def random_broadcast(rng, receivers=None, max_total=1.0):
    m = receivers or int(rng.integers(1, len(NAMES) + 1))
    total = rng.uniform(0.0, max_total)
    etas = rng.dirichlet([1.0] * (m + 1))[:m] * total
    names = NAMES[:m]
    return BroadcastSpec(collections.OrderedDict(zip(names, etas)))


def random_subset(rng, spec):
    names = spec.names
    size = int(rng.integers(1, len(names) + 1))
    picked = set(rng.choice(len(names), size=size, replace=False).tolist())
    return [name for k, name in enumerate(names) if k in picked]


class BroadcastSuite(Suite):
    """Pure-loss broadcast region: closed form against the Gaussian evaluation"""
    name = "broadcast"

    @invariant(tolerance=1e-10)
    def gaussian_cross_check(self, rng):
        spec = random_broadcast(rng)
        subset = random_subset(rng, spec)
        ns = rng.uniform(0.0, 5.0)
        return abs(broadcast_gaussian_check(spec, subset, ns) - broadcast_bound(spec, subset, ns))

    @invariant(tolerance=1e-12)
    def subset_monotonicity(self, rng):
        spec = random_broadcast(rng, receivers=int(rng.integers(2, 5)))
        subset = random_subset(rng, spec)
        rest = [name for name in spec.names if name not in subset]
        if not rest:
            subset, rest = subset[1:], subset[:1]
        ns = rng.uniform(0.0, 5.0)
        grown = subset + [rest[int(rng.integers(len(rest)))]]
        return broadcast_bound(spec, subset, ns) - broadcast_bound(spec, grown, ns)

    @invariant(tolerance=0.0)
    def zero_energy(self, rng):
        spec = random_broadcast(rng)
        return abs(broadcast_bound(spec, random_subset(rng, spec), 0.0))

    @invariant(tolerance=1e-12)
    def energy_monotonicity(self, rng):
        spec = random_broadcast(rng)
        subset = random_subset(rng, spec)
        values = [broadcast_bound(spec, subset, ns) for ns in grid(0.0, 5.0, 0.25)]
        return max(0.0, max(a - b for a, b in zip(values, values[1:])))

    @invariant(tolerance=1e-6)
    def infinite_energy(self, rng):
        spec = random_broadcast(rng, max_total=0.95)
        subset = random_subset(rng, spec)
        limit = broadcast_bound_limit(spec, subset)
        if math.isinf(limit):
            return 0.0
        return abs(broadcast_bound(spec, subset, 1e9) - limit)

    @invariant(tolerance=1e-9, trials=20)
    def thermal_input_optimality(self, rng):
        spec = random_broadcast(rng, receivers=2)
        subset = random_subset(rng, spec)
        ns = rng.uniform(0.01, 2.0)
        best = broadcast_objective_state(spec, subset, thermal_state(ns))
        worst = -math.inf
        for _ in range(INPUTS_PER_CHANNEL):
            value = broadcast_objective_state(spec, subset, random_energy_constrained_input(ns, rng))
            worst = max(worst, value - best)
        return worst
