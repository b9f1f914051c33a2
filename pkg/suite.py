import collections
import itertools
import logging
import math

import numpy as np

from backend import run_pool

logger = logging.getLogger(__name__)

_order = itertools.count()

InvariantResult = collections.namedtuple(
    "InvariantResult", ["suite", "invariant", "trials", "max_violation", "tolerance", "passed"])


class Invariant(object):
    def __init__(self, name, tolerance, trials, order):
        self.name = name
        self.tolerance = tolerance
        self.trials = trials
        self.order = order


def invariant(tolerance=1e-9, trials=None):
    """
    Mark a Suite method as an invariant check. The method takes a
    numpy Generator and returns the violation of one trial; the check
    passes if no trial exceeds `tolerance`. `trials` fixes the trial count
    for deterministic checks, otherwise the suite's count applies.
    """
    def wrap(fn):
        fn.invariant = Invariant(fn.__name__, tolerance, trials, next(_order))
        return fn
    return wrap


class Suite(object):
    name = ""

    def __init__(self, seed=0, trials=200):
        self.seed = seed
        self.trials = trials

    def setup(self):
        """Override this to prepare fixtures shared by all invariants"""

    def invariants(self):
        found = []
        for attr in dir(type(self)):
            inv = getattr(getattr(type(self), attr), "invariant", None)
            if isinstance(inv, Invariant):
                found.append(inv)
        return sorted(found, key=lambda inv: inv.order)

    def check(self, inv, seed_seq):
        fn = getattr(self, inv.name)
        rng = np.random.default_rng(seed_seq)
        trials = inv.trials or self.trials
        worst = 0.0
        for _ in range(trials):
            violation = float(fn(rng))
            if math.isnan(violation):
                worst = math.inf
                break
            worst = max(worst, violation)
        passed = worst <= inv.tolerance
        result = InvariantResult(self.name, inv.name, trials, worst, inv.tolerance, passed)
        if passed:
            logger.info("%s.%s: max violation %.3g over %d trials", self.name, inv.name, worst, trials)
        else:
            logger.warning("%s.%s FAILED: max violation %.3g > %.3g", self.name, inv.name, worst,
                           inv.tolerance)
        return result

    def run(self, threads=None):
        """Run every invariant; each draws from its own child of the suite seed"""
        self.setup()
        invs = self.invariants()
        seeds = np.random.SeedSequence(self.seed).spawn(len(invs))
        return run_pool(list(zip(invs, seeds)), lambda task: self.check(*task), threads)
