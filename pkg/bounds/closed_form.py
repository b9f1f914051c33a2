import math

from errors import DomainError
from gaussian import g
from gaussian.entropy import LN2

SINGULAR_TOL = 1e-9


def _check_ns(ns):
    if not ns >= 0.0 or math.isinf(ns):
        raise DomainError("Mean input photon number must be finite and >= 0, got {}".format(ns))


def pure_loss_bound(eta, ns):
    """g(N_S(1+eta)/2) - g(N_S(1-eta)/2)"""
    if not 0.0 <= eta <= 1.0:
        raise DomainError("Transmissivity must lie in [0, 1], got {}".format(eta))
    _check_ns(ns)
    return max(0.0, g(ns * (1.0 + eta) / 2.0) - g(ns * (1.0 - eta) / 2.0))


def pure_loss_limit(eta):
    """Pure-loss bound as N_S grows without limit"""
    if not 0.0 <= eta <= 1.0:
        raise DomainError("Transmissivity must lie in [0, 1], got {}".format(eta))
    if eta == 1.0:
        return math.inf
    return math.log2((1.0 + eta) / (1.0 - eta))


def pure_amp_bound(gain, ns):
    """g(N_S(G+1)/2 + (G-1)/2) - g((N_S+1)(G-1)/2)"""
    if not gain >= 1.0:
        raise DomainError("Gain must be >= 1, got {}".format(gain))
    _check_ns(ns)
    return max(0.0, g(ns * (gain + 1.0) / 2.0 + (gain - 1.0) / 2.0)
               - g((ns + 1.0) * (gain - 1.0) / 2.0))


def plob_raw(eta, nb):
    """-log2((1-eta) eta^N_B) - g(N_B), unclipped. Vanishes at eta = N_B/(N_B+1) and grows again below it"""
    if not 0.0 < eta < 1.0:
        raise DomainError("PLOB bound needs 0 < eta < 1, got {}".format(eta))
    if not nb >= 0.0:
        raise DomainError("Environment photon number must be >= 0, got {}".format(nb))
    return -math.log2(1.0 - eta) - nb * math.log2(eta) - g(nb)


def plob_bound(eta, nb):
    """Zero for entanglement-breaking channels"""
    raw = plob_raw(eta, nb)
    if eta <= nb / (nb + 1.0):
        return 0.0
    return max(0.0, raw)


def limit_bound(T, G):
    """
    Infinite-energy limit of the bound for a loss-after-amplifier
    decomposition with pure-loss transmissivity T and gain G:

        [(1-T^2) G L1 - (G^2-1) T L2] / (1 - G^2 T^2)

    with L1 = log2((1+T)/(1-T)) and L2 = log2((G+1)/(G-1)). The removable
    singularity at GT = 1 is evaluated from its analytic limit.
    """
    if not 0.0 < T <= 1.0:
        raise DomainError("limit_bound needs 0 < T <= 1, got {}".format(T))
    if not G >= 1.0:
        raise DomainError("limit_bound needs G >= 1, got {}".format(G))
    if T == 1.0 and G == 1.0:
        return math.inf
    if G == 1.0:
        return math.log2((1.0 + T) / (1.0 - T))
    if T == 1.0:
        return math.log2((G + 1.0) / (G - 1.0))

    l1 = math.log2((1.0 + T) / (1.0 - T))
    denom = 1.0 - G * G * T * T
    if abs(denom) < SINGULAR_TOL:
        return ((1.0 + T * T) * l1 - 2.0 * T / LN2) / (2.0 * T)
    l2 = math.log2((G + 1.0) / (G - 1.0))
    return ((1.0 - T * T) * G * l1 - (G * G - 1.0) * T * l2) / denom
