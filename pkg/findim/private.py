import itertools
import logging
import math

import numpy as np
from scipy.linalg import block_diag

from errors import DomainError, StateError
from gaussian import g
from .measures import fidelity, trace_distance
from .state import (DensityOperator, PureStateVector, as_density, dephase, partial_trace, purify,
                    tensor)

logger = logging.getLogger(__name__)

UNITARY_TOL = 1e-10


def ghz_state(m, K, labels=None):
    """(1/sqrt K) sum_i |i>^(x)m"""
    if m < 2 or K < 2:
        raise DomainError("ghz_state needs m >= 2 and K >= 2, got m={} K={}".format(m, K))
    if labels is None:
        labels = ["A{}".format(k + 1) for k in range(m)]
    dims = (K,) * m
    vec = np.zeros(K ** m, dtype=complex)
    for i in range(K):
        vec[np.ravel_multi_index((i,) * m, dims)] = 1.0 / math.sqrt(K)
    return PureStateVector(vec, dims, labels)


def twisting_unitary(K, m, shield_dim, blocks=None):
    """
    sum_{i1..im} |i1..im><i1..im| (x) U^{i1..im}. `blocks` maps key tuples
    to shield unitaries; missing entries are the identity.
    """
    blocks = dict(blocks or {})
    for key in blocks:
        if len(key) != m or any(not 0 <= i < K for i in key):
            raise DomainError("Twisting key {} does not index {} key systems of size {}".format(key, m, K))
    out = []
    for key in itertools.product(range(K), repeat=m):
        u = np.asarray(blocks.get(key, np.eye(shield_dim)), dtype=complex)
        if u.shape != (shield_dim, shield_dim):
            raise DomainError("Twisting block {} has shape {}, expected {}".format(
                key, u.shape, (shield_dim, shield_dim)))
        err = np.max(np.abs(u.conj().T @ u - np.eye(shield_dim)))
        if err > UNITARY_TOL:
            raise StateError("Twisting block {} is not unitary (defect {:.3g})".format(key, err))
        out.append(u)
    return block_diag(*out)


def multipartite_private_state(m, K, shield_state, twisting=None, key_labels=None):
    """U (GHZ (x) sigma) U^dag with key systems first, shields after"""
    key = ghz_state(m, K, key_labels)
    overlap = set(key.labels) & set(shield_state.labels)
    if overlap:
        raise DomainError("Shield labels collide with key labels: {}".format(sorted(overlap)))
    u = twisting_unitary(K, m, shield_state.dim, twisting)
    base = tensor(key, shield_state)
    if isinstance(base, PureStateVector):
        return PureStateVector(u @ base.amplitudes, base.dims, base.labels)
    return DensityOperator(u @ base.matrix @ u.conj().T, base.dims, base.labels)


def private_state(K, shield_state, twisting=None, key_labels=("A", "B")):
    return multipartite_private_state(2, K, shield_state, twisting, key_labels)


def measure_key(state, key_labels):
    """Joint outcome distribution of computational-basis key measurements"""
    rho = partial_trace(state, key_labels)
    return np.clip(np.real(np.diagonal(rho.matrix)), 0.0, None).reshape(rho.dims)


def tripartite_key_state(state, key_labels, eve_label="E"):
    """Purify a private state and discard the shields"""
    psi = purify(as_density(state), eve_label)
    return partial_trace(psi, list(key_labels) + [eve_label])


def key_state_defect(state, key_labels, eve_labels):
    """
    Trace distance between the key-measured state and
    (1/K) sum_i |i..i><i..i| (x) sigma_E, with sigma_E the eavesdropper marginal.
    """
    key_labels, eve_labels = list(key_labels), list(eve_labels)
    rho = partial_trace(state, key_labels + eve_labels)
    measured = dephase(rho, key_labels)
    dims = rho.dims[:len(key_labels)]
    if len(set(dims)) != 1:
        raise DomainError("Key systems must share one dimension, got {}".format(dims))
    K = dims[0]
    ideal_keys = np.zeros((int(np.prod(dims)),) * 2)
    for i in range(K):
        k = np.ravel_multi_index((i,) * len(dims), dims)
        ideal_keys[k, k] = 1.0 / K
    sigma = partial_trace(state, eve_labels).matrix
    ideal = DensityOperator(np.kron(ideal_keys, sigma), rho.dims, rho.labels, validate=False)
    return trace_distance(measured, ideal)


def approximate_private_slack(rho, ideal, K, esq_value):
    """
    esq_value + 2 sqrt(eps) log2 K + 2 g(sqrt(eps)) - log2 K, with
    eps = 1 - F(ideal, rho). Non-negative whenever esq_value is an upper
    bound on the squashed entanglement of rho.
    """
    eps = min(1.0, max(0.0, 1.0 - fidelity(ideal, rho)))
    root = math.sqrt(eps)
    return esq_value + 2.0 * root * math.log2(K) + 2.0 * g(root) - math.log2(K)
