import math

import numpy as np
from scipy.special import xlogy

from errors import DomainError
from gaussian import g
from gaussian.entropy import LN2
from .state import DensityOperator, PureStateVector, as_density, partial_trace

SUPPORT_TOL = 1e-12


def _spectrum_entropy(p):
    p = np.clip(np.real(p), 0.0, None)
    return float(-np.sum(xlogy(p, p)) / LN2)


def entropy(state):
    """Von Neumann entropy in bits"""
    if isinstance(state, PureStateVector):
        return 0.0
    if isinstance(state, DensityOperator):
        return _spectrum_entropy(state.eigenvalues())
    return _spectrum_entropy(np.linalg.eigvalsh(np.asarray(state)))


def marginal_entropy(state, labels):
    labels = list(labels)
    if not labels:
        return 0.0
    if isinstance(state, PureStateVector):
        if len(labels) == len(state.labels):
            return 0.0
        return _spectrum_entropy(state.schmidt_probabilities(labels))
    return entropy(partial_trace(state, labels))


class Entropies(object):
    """Memoized marginal entropies of one state, keyed by the set of labels"""

    def __init__(self, state):
        self.state = state
        self._cache = {}

    def __call__(self, labels):
        key = frozenset(labels)
        if key not in self._cache:
            ordered = [l for l in self.state.labels if l in key]
            if len(ordered) != len(key):
                raise DomainError("Unknown subsystem(s) in {}".format(sorted(key)))
            self._cache[key] = marginal_entropy(self.state, ordered)
        return self._cache[key]

    def cqmi(self, a, b, e=()):
        """H(AE) + H(BE) - H(ABE) - H(E)"""
        a, b, e = _disjoint(a, b, e)
        return self(a + e) + self(b + e) - self(a + b + e) - self(e)


def _group(part):
    if isinstance(part, str):
        return [part]
    return list(part)


def _disjoint(*groups):
    groups = [_group(p) for p in groups]
    seen = set()
    for group in groups:
        if seen & set(group):
            raise DomainError("Subsystem groups overlap: {}".format(groups))
        seen.update(group)
    return groups


def relative_entropy(rho, sigma):
    """D(rho||sigma) in bits; +inf when supp(rho) is not inside supp(sigma)"""
    rho, sigma = as_density(rho), as_density(sigma)
    _check_same_shape(rho, sigma)
    p, u = np.linalg.eigh(rho.matrix)
    q, v = np.linalg.eigh(sigma.matrix)
    p = np.clip(p, 0.0, None)
    # |<u_i|v_j>|^2
    overlap = np.abs(u.conj().T @ v) ** 2
    null = q < SUPPORT_TOL
    if np.any(overlap[:, null][p >= SUPPORT_TOL] * p[p >= SUPPORT_TOL, None] > SUPPORT_TOL):
        return math.inf
    log_q = np.where(null, 0.0, np.log2(np.where(null, 1.0, q)))
    cross = float(np.sum(p[:, None] * overlap * log_q[None, :]))
    value = -_spectrum_entropy(p) - cross
    return max(0.0, value)


def fidelity(rho, sigma):
    """||sqrt(rho) sqrt(sigma)||_1^2"""
    rho, sigma = as_density(rho), as_density(sigma)
    _check_same_shape(rho, sigma)
    s = np.linalg.svd(_psd_sqrt(rho.matrix) @ _psd_sqrt(sigma.matrix), compute_uv=False)
    return float(min(1.0, np.sum(s) ** 2))


def trace_distance(rho, sigma):
    """||rho - sigma||_1, between 0 and 2"""
    rho, sigma = as_density(rho), as_density(sigma)
    _check_same_shape(rho, sigma)
    return float(np.sum(np.abs(np.linalg.eigvalsh(rho.matrix - sigma.matrix))))


def _psd_sqrt(m):
    w, u = np.linalg.eigh(m)
    return (u * np.sqrt(np.clip(w, 0.0, None))) @ u.conj().T


def _check_same_shape(rho, sigma):
    if rho.dims != sigma.dims:
        raise DomainError("Dimension mismatch: {} vs {}".format(rho.dims, sigma.dims))


def mutual_information(state, a, b):
    return Entropies(state).cqmi(a, b)


def conditional_entropy(state, a, b):
    """H(A|B) = H(AB) - H(B)"""
    a, b = _disjoint(a, b)
    h = Entropies(state)
    return h(a + b) - h(b)


def cqmi(state, a, b, e=()):
    return Entropies(state).cqmi(a, b, e)


def _parts(parts):
    parts = [_group(p) for p in parts]
    if len(parts) < 2:
        raise DomainError("Need at least two parts, got {}".format(len(parts)))
    return parts


def conditional_total_correlation(state, parts, e=(), entropies=None):
    """sum_{i>=2} I(A_i; A_1..A_{i-1} | E)"""
    parts = _parts(parts)
    e = _group(e)
    _disjoint(e, *parts)
    h = entropies or Entropies(state)
    total = 0.0
    for i in range(1, len(parts)):
        total += h.cqmi(parts[i], sum(parts[:i], []), e)
    return total


def dual_total_correlation(state, parts, e=(), entropies=None):
    """sum_{i>=2} I(A_i; A_1..A_{i-1} | A_{i+1}..A_m E)"""
    parts = _parts(parts)
    e = _group(e)
    _disjoint(e, *parts)
    h = entropies or Entropies(state)
    total = 0.0
    for i in range(1, len(parts)):
        total += h.cqmi(parts[i], sum(parts[:i], []), sum(parts[i + 1:], []) + e)
    return total


def correlation_sum(state, parts, e=(), entropies=None):
    """sum_i I(A_i; rest | E), equal to total plus dual total correlation"""
    parts = _parts(parts)
    e = _group(e)
    h = entropies or Entropies(state)
    return sum(h.cqmi(p, sum(parts[:i] + parts[i + 1:], []), e) for i, p in enumerate(parts))


def continuity_gap(rho, sigma, dims):
    """
    sqrt(2 eps) log2(min(dims)) + g(sqrt(2 eps)) with eps = ||rho - sigma||_1 / 2:
    the largest change of squashed entanglement between two states that
    close, for local dimensions `dims`.
    """
    eps = 0.5 * trace_distance(rho, sigma)
    eps = min(1.0, max(0.0, eps))
    if len(dims) != 2:
        raise DomainError("continuity_gap needs the two local dimensions")
    root = math.sqrt(2.0 * eps)
    return root * math.log2(min(dims)) + g(root)

