import math

import numpy as np

from bounds import (ChannelSpec, decompose_loss_then_amp, decompose_amp_then_loss, build_dilation,
                    evaluate_objective, evaluate_objective_state, random_energy_constrained_input,
                    is_entanglement_breaking, eb_threshold, dsw18_bound, gew16_bound, plob_bound,
                    pure_loss_bound, pure_loss_limit, pure_amp_bound, limit_bound, THERMAL,
                    AMPLIFIER, ADDITIVE_NOISE)
from gaussian import random_gaussian_state
from suite import Suite, invariant
from utils import grid

COVARIANCES_PER_CHANNEL = 20
INPUTS_PER_CHANNEL = 100


def random_channel(rng, kinds=(THERMAL, AMPLIFIER, ADDITIVE_NOISE)):
    kind = kinds[int(rng.integers(len(kinds)))]
    if kind == THERMAL:
        return ChannelSpec.thermal(rng.uniform(0.01, 0.99), rng.uniform(0.0, 2.0))
    if kind == AMPLIFIER:
        return ChannelSpec.amplifier(rng.uniform(1.01, 3.0), rng.uniform(0.0, 2.0))
    return ChannelSpec.additive_noise(rng.uniform(0.0, 2.0))


def random_breakable_channel(rng, kinds=(THERMAL, ADDITIVE_NOISE)):
    """A random channel that is not entanglement breaking, with some room to spare"""
    while True:
        ch = random_channel(rng, kinds)
        if ch.kind == THERMAL and ch.eta - eb_threshold(ch.nb) > 0.02:
            return ch
        if ch.kind == ADDITIVE_NOISE and ch.xi < 0.98:
            return ch


def decompositions(ch):
    out = [decompose_loss_then_amp(ch)]
    if ch.kind != AMPLIFIER and not is_entanglement_breaking(ch):
        out.append(decompose_amp_then_loss(ch))
    return out


class BoundsSuite(Suite):
    """Decompositions, dilation chains and the bounds built on them"""
    name = "bounds"

    @invariant(tolerance=1e-12)
    def decomposition_soundness(self, rng):
        ch = random_channel(rng)
        worst = 0.0
        for _ in range(COVARIANCES_PER_CHANNEL):
            cov = random_gaussian_state(1, rng).cov
            direct = ch.apply_cov(cov)
            for d in decompositions(ch):
                err = np.max(np.abs(d.apply_cov(cov) - direct)) / max(1.0, np.max(np.abs(direct)))
                worst = max(worst, float(err))
        return worst

    @invariant(tolerance=1e-9)
    def squashing_symmetry(self, rng):
        # equal squashing splits give H(B|E1'E2') = H(B|F1'F2')
        ch = random_breakable_channel(rng)
        ns = rng.uniform(0.0, 2.0)
        worst = 0.0
        for d in decompositions(ch):
            value = evaluate_objective(build_dilation(d), ns)
            worst = max(worst, abs(value.h_be - value.h_bf))
        return worst

    @invariant(tolerance=1e-9, trials=5)
    def thermal_input_optimality(self, rng):
        ch = random_breakable_channel(rng)
        ns = rng.uniform(0.01, 2.0)
        worst = -math.inf
        for d in decompositions(ch):
            chain = build_dilation(d)
            best = sum(evaluate_objective(chain, ns))
            for _ in range(INPUTS_PER_CHANNEL):
                value = evaluate_objective_state(chain, random_energy_constrained_input(ns, rng))
                worst = max(worst, sum(value) - best)
        return worst

    @invariant(tolerance=1e-9, trials=1)
    def energy_monotonicity(self, rng):
        worst = 0.0
        for eta, nb in ((0.9, 0.1), (0.75, 1.0), (0.6, 0.25)):
            ch = ChannelSpec.thermal(eta, nb)
            for bound in (dsw18_bound, gew16_bound):
                values = np.array([bound(ch, ns) for ns in grid(0.0, 5.0, 0.05)])
                worst = max(worst, -float(np.min(np.diff(values))))
        return worst

    @invariant(tolerance=1e-9, trials=1)
    def dominance(self, rng):
        """dsw18 never exceeds gew16 on the plotted parameter range"""
        worst = 0.0
        for nb in (0.1, 1.0):
            for ns in (0.1, 1.0):
                for eta in grid(0.51, 0.99, 0.01):
                    ch = ChannelSpec.thermal(eta, nb)
                    if is_entanglement_breaking(ch):
                        continue
                    worst = max(worst, dsw18_bound(ch, ns) - gew16_bound(ch, ns))
        return worst

    @invariant(tolerance=1e-3, trials=1)
    def eb_vanishing(self, rng):
        worst = 0.0
        for nb in (0.5, 1.0, 2.0):
            ch = ChannelSpec.thermal(eb_threshold(nb) + 1e-4, nb)
            d = decompose_amp_then_loss(ch)
            worst = max(worst, dsw18_bound(ch, 0.1), limit_bound(d.T, d.G))
        return worst

    @invariant(tolerance=1e-3)
    def infinite_energy(self, rng):
        nb = rng.uniform(0.0, 1.0)
        eta = rng.uniform(max(0.55, eb_threshold(nb) + 0.05), 0.95)
        ch = ChannelSpec.thermal(eta, nb)
        d = decompose_amp_then_loss(ch)
        return abs(dsw18_bound(ch, 1e6) - limit_bound(d.T, d.G))

    @invariant(tolerance=1e-9, trials=1)
    def closed_form_degeneracy(self, rng):
        worst = 0.0
        for ns in (0.0, 0.1, 1.0, 5.0):
            for eta in grid(0.1, 0.9, 0.1):
                ch = ChannelSpec.thermal(eta, 0.0)
                target = pure_loss_bound(eta, ns)
                worst = max(worst, abs(gew16_bound(ch, ns) - target), abs(dsw18_bound(ch, ns) - target))
            for gain in (1.5, 2.0, 4.0):
                ch = ChannelSpec.amplifier(gain, 0.0)
                worst = max(worst, abs(gew16_bound(ch, ns) - pure_amp_bound(gain, ns)))
        return worst

    @invariant(tolerance=1e-12)
    def bound_consistency(self, rng):
        eta = rng.uniform(0.0, 0.999)
        ns = rng.uniform(0.0, 10.0)
        ch = random_channel(rng)
        lowest = min(pure_loss_bound(eta, ns), gew16_bound(ch, ns))
        return max(pure_loss_bound(eta, ns) - pure_loss_limit(eta), -lowest)

    @invariant(tolerance=1e-4, trials=1)
    def low_noise_agreement(self, rng):
        worst = 0.0
        ch = ChannelSpec.thermal(0.1, 3e-7)
        for ns in grid(0.0, 1.0, 0.05):
            worst = max(worst, abs(dsw18_bound(ch, ns) - gew16_bound(ch, ns)))
        return worst

    @invariant(tolerance=1e-12, trials=1)
    def plob_reference(self, rng):
        # -log2(0.5) - log2(0.5) cancels against g(1) = 2
        return plob_bound(0.5, 1.0)
