import logging
import math

import numpy as np

from errors import DomainError
from gaussian import GaussianState

logger = logging.getLogger(__name__)

THERMAL = "thermal"
AMPLIFIER = "amplifier"
ADDITIVE_NOISE = "additive_noise"
KINDS = (THERMAL, AMPLIFIER, ADDITIVE_NOISE)

LOSS_THEN_AMP = "loss_then_amp"
AMP_THEN_LOSS = "amp_then_loss"

DECOMPOSITION_TOL = 1e-12


class ChannelSpec(object):
    """Parameters of a single-mode phase-insensitive Gaussian channel"""

    def __init__(self, kind, eta=None, gain=None, nb=0.0, xi=None):
        if kind not in KINDS:
            raise DomainError("Unknown channel kind '{}'".format(kind))
        if kind == THERMAL:
            if eta is None or not 0.0 < eta < 1.0:
                raise DomainError("Thermal channel needs 0 < eta < 1, got {}".format(eta))
        elif kind == AMPLIFIER:
            if gain is None or not gain > 1.0:
                raise DomainError("Amplifier channel needs gain > 1, got {}".format(gain))
        else:
            if xi is None or not xi >= 0.0:
                raise DomainError("Additive-noise channel needs xi >= 0, got {}".format(xi))
        if kind in (THERMAL, AMPLIFIER) and not nb >= 0.0:
            raise DomainError("Environment photon number must be >= 0, got {}".format(nb))
        self.kind = kind
        self.eta = None if eta is None else float(eta)
        self.gain = None if gain is None else float(gain)
        self.nb = float(nb) if kind != ADDITIVE_NOISE else 0.0
        self.xi = None if xi is None else float(xi)

    @classmethod
    def thermal(cls, eta, nb):
        return cls(THERMAL, eta=eta, nb=nb)

    @classmethod
    def amplifier(cls, gain, nb=0.0):
        return cls(AMPLIFIER, gain=gain, nb=nb)

    @classmethod
    def additive_noise(cls, xi):
        return cls(ADDITIVE_NOISE, xi=xi)

    def covariance_action(self):
        """(x2, y) with V -> x2 V + y I; the mean scales by sqrt(x2)"""
        if self.kind == THERMAL:
            return self.eta, (1.0 - self.eta) * (2.0 * self.nb + 1.0)
        if self.kind == AMPLIFIER:
            return self.gain, (self.gain - 1.0) * (2.0 * self.nb + 1.0)
        return 1.0, 2.0 * self.xi

    def apply_cov(self, cov):
        x2, y = self.covariance_action()
        return x2 * np.asarray(cov) + y * np.eye(2)

    def __repr__(self):
        if self.kind == THERMAL:
            return "ChannelSpec(thermal, eta={:g}, nb={:g})".format(self.eta, self.nb)
        if self.kind == AMPLIFIER:
            return "ChannelSpec(amplifier, gain={:g}, nb={:g})".format(self.gain, self.nb)
        return "ChannelSpec(additive_noise, xi={:g})".format(self.xi)


class Decomposition(object):
    """Pure-loss T and pure-amplifier G stages, applied in `order`"""

    def __init__(self, order, T, G, source=None):
        if order not in (LOSS_THEN_AMP, AMP_THEN_LOSS):
            raise DomainError("Unknown decomposition order '{}'".format(order))
        if not 0.0 < T <= 1.0:
            raise DomainError("Decomposition needs 0 < T <= 1, got {}".format(T))
        if not G >= 1.0:
            raise DomainError("Decomposition needs G >= 1, got {}".format(G))
        self.order = order
        self.T = float(T)
        self.G = float(G)
        self.source = source
        if source is not None:
            self.check_against(source)

    def covariance_action(self):
        T, G = self.T, self.G
        if self.order == LOSS_THEN_AMP:
            return G * T, G * (1.0 - T) + (G - 1.0)
        return G * T, T * (G - 1.0) + (1.0 - T)

    def apply_cov(self, cov):
        """Stage-by-stage covariance evolution"""
        cov = np.asarray(cov, dtype=float)
        stages = [self._loss, self._amp]
        if self.order == AMP_THEN_LOSS:
            stages.reverse()
        for stage in stages:
            cov = stage(cov)
        return cov

    def _loss(self, cov):
        return self.T * cov + (1.0 - self.T) * np.eye(2)

    def _amp(self, cov):
        return self.G * cov + (self.G - 1.0) * np.eye(2)

    def check_against(self, channel):
        x2, y = channel.covariance_action()
        dx2, dy = self.covariance_action()
        err = max(abs(x2 - dx2), abs(y - dy))
        if err > DECOMPOSITION_TOL * max(1.0, abs(y)):
            raise DomainError("{} decomposition does not reproduce {} (defect {:.3g})".format(
                self.order, channel, err), code="decomposition_mismatch")

    def __repr__(self):
        return "Decomposition({}, T={:.12g}, G={:.12g})".format(self.order, self.T, self.G)


def decompose_loss_then_amp(ch):
    """N = A_G o L_T"""
    if ch.kind == THERMAL:
        G = 1.0 + (1.0 - ch.eta) * ch.nb
        T = ch.eta / G
    elif ch.kind == ADDITIVE_NOISE:
        G = 1.0 + ch.xi
        T = 1.0 / G
    else:
        G = ch.gain + (ch.gain - 1.0) * ch.nb
        T = ch.gain / G
    logger.debug("loss_then_amp of %r: T=%.12g G=%.12g", ch, T, G)
    return Decomposition(LOSS_THEN_AMP, T, G, source=ch)


def decompose_amp_then_loss(ch):
    """N = L_T o A_G, only for channels that are not entanglement breaking"""
    if ch.kind == AMPLIFIER:
        raise DomainError("amp_then_loss decomposition is not provided for amplifier channels",
                          code="unsupported_kind")
    if is_entanglement_breaking(ch):
        raise DomainError("{} is entanglement breaking".format(ch), code="entanglement_breaking")
    if ch.kind == THERMAL:
        T = ch.eta - (1.0 - ch.eta) * ch.nb
        G = ch.eta / T
    else:
        T = 1.0 - ch.xi
        G = 1.0 / T
    return Decomposition(AMP_THEN_LOSS, T, G, source=ch)


def is_entanglement_breaking(ch):
    if ch.kind == THERMAL:
        return ch.eta <= (1.0 - ch.eta) * ch.nb
    if ch.kind == ADDITIVE_NOISE:
        return ch.xi >= 1.0
    raise DomainError("Entanglement-breaking test is not provided for amplifier channels",
                      code="unsupported_kind")


def eb_threshold(nb):
    """Transmissivity at which a thermal channel with nb photons becomes entanglement breaking"""
    return nb / (nb + 1.0)


def channel_output(ch, state):
    """Push a single-mode GaussianState through the channel"""
    if state.num_modes != 1:
        raise DomainError("channel_output needs a single-mode state")
    x2, _ = ch.covariance_action()
    return GaussianState(math.sqrt(x2) * state.mean, ch.apply_cov(state.cov), state.labels)
