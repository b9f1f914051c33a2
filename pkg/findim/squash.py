import logging

import numpy as np
from scipy.optimize import minimize

from errors import DomainError, StateError
from .measures import Entropies, conditional_total_correlation, dual_total_correlation
from .state import apply_channel, partial_trace, purify

logger = logging.getLogger(__name__)

COMPLETENESS_TOL = 1e-10
EXTENSION = "R"
SQUASHED = "E'"


class SquashingChannelParam(object):
    """Kraus operators of a channel from the extension system to E'"""

    def __init__(self, kraus, name=""):
        kraus = [np.asarray(k, dtype=complex) for k in kraus]
        if not kraus:
            raise StateError("Squashing channel needs at least one Kraus operator")
        shape = kraus[0].shape
        if len(shape) != 2 or any(k.shape != shape for k in kraus):
            raise StateError("Kraus operators must be matrices of one shape")
        total = sum(k.conj().T @ k for k in kraus)
        err = np.max(np.abs(total - np.eye(shape[1])))
        if err > COMPLETENESS_TOL:
            raise StateError("Kraus operators are not complete (defect {:.3g})".format(err))
        self.kraus = kraus
        self.name = name

    @property
    def input_dim(self):
        return self.kraus[0].shape[1]

    @property
    def output_dim(self):
        return self.kraus[0].shape[0]

    def __repr__(self):
        return "SquashingChannelParam({}, {} -> {})".format(
            self.name or "?", self.input_dim, self.output_dim)


def identity_squasher(d):
    return SquashingChannelParam([np.eye(d)], "identity")


def discard_squasher(d):
    """Traces the extension out; E' is one-dimensional"""
    return SquashingChannelParam([np.eye(d)[i:i + 1, :] for i in range(d)], "discard")


def dephasing_squasher(d):
    return SquashingChannelParam([np.diag(np.eye(d)[i]) for i in range(d)], "dephase")


def kraus_from_parameters(x, d_in, d_out, n_env):
    """Real vector -> Kraus list via the QR-orthonormalized Stinespring isometry"""
    rows = d_out * n_env
    m = (x[:rows * d_in] + 1j * x[rows * d_in:]).reshape(rows, d_in)
    q, _ = np.linalg.qr(m)
    v = q.reshape(d_out, n_env, d_in)
    return [v[:, k, :] for k in range(n_env)]


def _extension(rho, labels):
    reduced = partial_trace(rho, labels)
    if EXTENSION in reduced.labels or SQUASHED in reduced.labels:
        raise DomainError("Labels '{}' and '{}' are reserved".format(EXTENSION, SQUASHED))
    return purify(reduced, EXTENSION)


def _squashed(psi, candidate):
    if candidate.input_dim != psi.dims[-1]:
        raise DomainError("{!r} takes dimension {}, the extension has {}".format(
            candidate, candidate.input_dim, psi.dims[-1]))
    return apply_channel(psi, candidate.kraus, [EXTENSION], SQUASHED)


def _minimize(objective, psi, candidates, restarts, rng, n_env, maxfev):
    best, best_name = np.inf, None
    for candidate in candidates:
        value = objective(_squashed(psi, candidate))
        if value < best:
            best, best_name = value, candidate.name
    d = psi.dims[-1]
    rng = rng if rng is not None else np.random.default_rng()
    for k in range(restarts):
        size = 2 * d * n_env * d

        def fun(x):
            return objective(_squashed(psi, SquashingChannelParam(kraus_from_parameters(x, d, d, n_env))))

        res = minimize(fun, rng.standard_normal(size), method="Powell",
                       options={"maxfev": maxfev, "xtol": 1e-6, "ftol": 1e-10})
        logger.debug("Squasher search restart %d: %.12g after %d evaluations", k, res.fun, res.nfev)
        if res.fun < best:
            best, best_name = float(res.fun), "search"
    logger.debug("Best squasher: %s (%.12g)", best_name, best)
    return float(best)


def esq_upper(rho, a, b, candidates=None, restarts=0, rng=None, n_env=2, maxfev=2000):
    """
    Upper bound on the squashed entanglement E_sq(A;B): half the conditional
    mutual information of the purification after the best squashing channel
    found among the identity, the given candidates and `restarts` local
    searches from random isometries. Never an estimate of E_sq itself.
    """
    a = [a] if isinstance(a, str) else list(a)
    b = [b] if isinstance(b, str) else list(b)
    psi = _extension(rho, a + b)
    d = psi.dims[-1]
    pool = [identity_squasher(d)] + list(candidates or [])

    def objective(omega):
        return 0.5 * Entropies(omega).cqmi(a, b, [SQUASHED])

    return _minimize(objective, psi, pool, restarts, rng, n_env, maxfev)


def multipartite_esq_upper(rho, parts, candidates=None, kind="total", restarts=0, rng=None,
                           n_env=2, maxfev=2000):
    """Half the conditional (dual) total correlation, minimized like `esq_upper`"""
    if kind not in ("total", "dual"):
        raise DomainError("kind must be 'total' or 'dual', got '{}'".format(kind))
    parts = [[p] if isinstance(p, str) else list(p) for p in parts]
    psi = _extension(rho, sum(parts, []))
    d = psi.dims[-1]
    pool = [identity_squasher(d), discard_squasher(d)] + list(candidates or [])
    measure = conditional_total_correlation if kind == "total" else dual_total_correlation

    def objective(omega):
        return 0.5 * measure(omega, parts, [SQUASHED])

    return _minimize(objective, psi, pool, restarts, rng, n_env, maxfev)
