import math

import numpy as np
from scipy.linalg import LinAlgError, block_diag, cholesky

from errors import DomainError, StateError

SYMMETRY_TOL = 1e-12
CLAMP_TOL = 1e-9
PAIRING_TOL = 1e-8


def omega(n):
    """Block-diagonal symplectic form for n modes in (x, p) interleaved order"""
    return np.kron(np.eye(n), np.array([[0.0, 1.0], [-1.0, 0.0]]))


def quadrature_indices(modes):
    idx = []
    for k in modes:
        idx += [2 * k, 2 * k + 1]
    return idx


def symplectic_eigenvalues(state):
    """
    Symplectic spectrum as an ascending list of n values >= 1.

    The spectrum of i*Omega*V is computed through the Hermitian matrix
    i L^T Omega L with V = L L^T, which has the same eigenvalues +-nu_k.
    The Cholesky factor of a block-diagonal V is block diagonal, so the
    spectrum of a product state is the union of its factors' spectra.
    """
    cov = state.cov
    n = cov.shape[0] // 2
    try:
        low = cholesky(cov, lower=True)
    except (LinAlgError, ValueError):
        raise StateError("Covariance matrix is not positive definite")
    herm = 1j * (low.T @ omega(n) @ low)
    ev = np.linalg.eigvalsh(herm)

    neg = np.sort(-ev[:n])
    pos = np.sort(ev[n:])
    scale = max(1.0, float(pos[-1]))
    if np.any(np.abs(neg - pos) > PAIRING_TOL * scale):
        raise StateError("Symplectic eigenvalue pairing failed; covariance matrix corrupted")
    nu = 0.5 * (neg + pos)

    tol = CLAMP_TOL + 16 * np.finfo(float).eps * float(np.max(np.diag(cov)))
    if nu[0] < 1.0 - tol:
        raise StateError("Unphysical covariance matrix: symplectic eigenvalue {:.12g} < 1".format(nu[0]))
    return [max(1.0, float(v)) for v in nu]


class GaussianState(object):
    """
    Mean vector and covariance matrix over labeled bosonic modes.

    Quadratures are ordered x1, p1, ..., xn, pn and the vacuum covariance is
    the identity, so a thermal mode with N photons has covariance (2N+1)I.
    Instances are immutable; every operation returns a new state.
    """

    def __init__(self, mean, cov, labels=None, validate=True):
        mean = np.array(mean, dtype=float).reshape(-1)
        cov = np.array(cov, dtype=float)
        if cov.ndim != 2 or cov.shape[0] != cov.shape[1] or cov.shape[0] % 2:
            raise StateError("Invalid covariance matrix shape {}".format(cov.shape))
        if mean.shape[0] != cov.shape[0]:
            raise StateError("Mean vector length {} does not match covariance size {}".format(
                mean.shape[0], cov.shape[0]))
        n = cov.shape[0] // 2
        if n == 0:
            raise StateError("A Gaussian state needs at least one mode")
        if labels is None:
            labels = ["m{}".format(k) for k in range(n)]
        labels = tuple(str(label) for label in labels)
        if len(labels) != n:
            raise StateError("Expected {} labels, got {}".format(n, len(labels)))
        if len(set(labels)) != n:
            raise StateError("Mode labels must be distinct: {}".format(labels))
        if np.max(np.abs(cov - cov.T)) > 1e-9 * max(1.0, np.max(np.abs(cov))):
            raise StateError("Covariance matrix is not symmetric")
        cov = 0.5 * (cov + cov.T)

        mean.setflags(write=False)
        cov.setflags(write=False)
        self._mean = mean
        self._cov = cov
        self._labels = labels

        if validate:
            # Raises StateError on unphysical input
            symplectic_eigenvalues(self)

    @property
    def mean(self):
        return self._mean

    @property
    def cov(self):
        return self._cov

    @property
    def labels(self):
        return self._labels

    @property
    def num_modes(self):
        return len(self._labels)

    def mode_index(self, mode):
        """Resolve a mode given by position or label"""
        if isinstance(mode, (int, np.integer)) and not isinstance(mode, bool):
            if not 0 <= mode < self.num_modes:
                raise DomainError("Mode index {} out of range for {} modes".format(
                    mode, self.num_modes))
            return int(mode)
        try:
            return self._labels.index(str(mode))
        except ValueError:
            raise DomainError("Unknown mode '{}'".format(mode))

    def mode_indices(self, modes):
        return [self.mode_index(m) for m in modes]

    def with_labels(self, labels):
        return GaussianState(self._mean, self._cov, labels, validate=False)

    def is_pure(self, tol=1e-9):
        return bool(np.all(np.asarray(symplectic_eigenvalues(self)) <= 1.0 + tol))

    def purity_defect(self):
        """Largest symplectic eigenvalue minus one; zero for pure states"""
        return float(max(symplectic_eigenvalues(self)) - 1.0)

    def __repr__(self):
        return "GaussianState(labels={})".format(list(self._labels))


def vacuum_state(n, labels=None):
    if n < 1:
        raise DomainError("vacuum_state needs n >= 1, got {}".format(n))
    return GaussianState(np.zeros(2 * n), np.eye(2 * n), labels, validate=False)


def thermal_state(N, label="m0"):
    if not N >= 0:
        raise DomainError("Thermal photon number must be >= 0, got {}".format(N))
    return GaussianState(np.zeros(2), (2 * N + 1) * np.eye(2), [label], validate=False)


def tensor(a, b):
    clash = set(a.labels) & set(b.labels)
    if clash:
        raise DomainError("Label collision in tensor product: {}".format(sorted(clash)))
    return GaussianState(np.concatenate([a.mean, b.mean]), block_diag(a.cov, b.cov),
                         a.labels + b.labels, validate=False)


def reduce(state, keep_modes):
    keep = state.mode_indices(keep_modes)
    if not keep:
        raise DomainError("reduce needs at least one mode to keep")
    if len(set(keep)) != len(keep):
        raise DomainError("Repeated modes in {}".format(list(keep_modes)))
    idx = quadrature_indices(keep)
    return GaussianState(state.mean[idx], state.cov[np.ix_(idx, idx)],
                         [state.labels[k] for k in keep], validate=False)


def displace(state, mode, dx, dp):
    k = state.mode_index(mode)
    if not (math.isfinite(dx) and math.isfinite(dp)):
        raise DomainError("Displacement must be finite")
    mean = state.mean.copy()
    mean[2 * k] += dx
    mean[2 * k + 1] += dp
    return GaussianState(mean, state.cov, state.labels, validate=False)


def coherent_displacement(alpha):
    """Quadrature shift (dx, dp) adding |alpha|^2 photons to a vacuum mode"""
    return math.sqrt(2) * alpha.real, math.sqrt(2) * alpha.imag


def mean_photon_number(state, mode):
    k = state.mode_index(mode)
    cov = state.cov
    x, p = state.mean[2 * k], state.mean[2 * k + 1]
    return float((cov[2 * k, 2 * k] + cov[2 * k + 1, 2 * k + 1] - 2.0) / 4.0 + (x * x + p * p) / 2.0)
