import numpy as np

from errors import DomainError
from .state import PureStateVector, partial_trace


def _complex_gaussian(rng, shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_pure_state(dims, labels=None, rng=None):
    rng = rng if rng is not None else np.random.default_rng()
    d = int(np.prod(dims))
    vec = _complex_gaussian(rng, d)
    return PureStateVector(vec / np.linalg.norm(vec), dims, labels)


def random_mixed_state(dims, labels=None, rng=None, ancilla_dim=None):
    """Marginal of a random pure state with an ancilla (same total size by default)"""
    rng = rng if rng is not None else np.random.default_rng()
    dims = tuple(dims)
    if labels is None:
        labels = ["S{}".format(k) for k in range(len(dims))]
    labels = list(labels)
    ancilla = "_anc"
    while ancilla in labels:
        ancilla += "_"
    psi = random_pure_state(dims + (ancilla_dim or int(np.prod(dims)),), labels + [ancilla], rng)
    return partial_trace(psi, labels)


def random_isometry(d_in, d_out, rng=None):
    """Haar-distributed isometry C^d_in -> C^d_out via QR with phase fixing"""
    if d_out < d_in:
        raise DomainError("Isometry needs d_out >= d_in, got {} < {}".format(d_out, d_in))
    rng = rng if rng is not None else np.random.default_rng()
    q, r = np.linalg.qr(_complex_gaussian(rng, (d_out, d_in)))
    phases = np.diagonal(r) / np.abs(np.diagonal(r))
    return q * phases[None, :]


def random_unitary(d, rng=None):
    return random_isometry(d, d, rng)


def random_kraus(d_in, d_out, n_kraus, rng=None):
    """Kraus operators of a random channel, read off a random Stinespring isometry"""
    v = random_isometry(d_in, d_out * n_kraus, rng)
    v = v.reshape(d_out, n_kraus, d_in)
    return [v[:, k, :] for k in range(n_kraus)]
