import math

import numpy as np

from errors import DomainError, StateError
from .state import GaussianState, omega, quadrature_indices

SYMPLECTIC_TOL = 1e-10


class SymplecticTransform(object):
    """Linear phase-space map acting on `arity` modes"""

    def __init__(self, matrix, name="", acted_modes=None):
        matrix = np.array(matrix, dtype=float)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] % 2:
            raise StateError("Invalid symplectic matrix shape {}".format(matrix.shape))
        m = matrix.shape[0] // 2
        err = symplectic_defect(matrix)
        if err > SYMPLECTIC_TOL:
            raise StateError("Matrix is not symplectic (defect {:.3g})".format(err))
        matrix.setflags(write=False)
        self.matrix = matrix
        self.name = name
        self.acted_modes = list(acted_modes) if acted_modes is not None else None

    @property
    def arity(self):
        return self.matrix.shape[0] // 2

    def on(self, *modes):
        """Bind the transform to target modes"""
        return SymplecticTransform(self.matrix, self.name, modes)

    def then(self, other):
        """Composition: `self` first, then `other` (same arity)"""
        return SymplecticTransform(other.matrix @ self.matrix,
                                   "{}*{}".format(other.name, self.name))

    def __repr__(self):
        return "SymplecticTransform({}, arity={})".format(self.name or "?", self.arity)


def identity(m=1):
    return SymplecticTransform(np.eye(2 * m), "identity")


def beamsplitter(t):
    """b = sqrt(t) a + sqrt(1-t) e,  e' = -sqrt(1-t) a + sqrt(t) e"""
    if not 0.0 <= t <= 1.0:
        raise DomainError("Beamsplitter transmissivity must lie in [0, 1], got {}".format(t))
    c, s = math.sqrt(t), math.sqrt(1.0 - t)
    i2 = np.eye(2)
    return SymplecticTransform(np.block([[c * i2, s * i2], [-s * i2, c * i2]]),
                               "beamsplitter({:g})".format(t))


def two_mode_squeezer(G):
    """b = sqrt(G) a + sqrt(G-1) e^dag,  e' = sqrt(G-1) a^dag + sqrt(G) e"""
    if not G >= 1.0:
        raise DomainError("Two-mode squeezer gain must be >= 1, got {}".format(G))
    c, s = math.sqrt(G), math.sqrt(G - 1.0)
    i2, z = np.eye(2), np.diag([1.0, -1.0])
    return SymplecticTransform(np.block([[c * i2, s * z], [s * z, c * i2]]),
                               "two_mode_squeezer({:g})".format(G))


def single_mode_squeezer(r):
    if not math.isfinite(r):
        raise DomainError("Squeeze parameter must be finite, got {}".format(r))
    return SymplecticTransform(np.diag([math.exp(r), math.exp(-r)]),
                               "squeezer({:g})".format(r))


def phase_rotation(phi):
    if not math.isfinite(phi):
        raise DomainError("Rotation angle must be finite, got {}".format(phi))
    c, s = math.cos(phi), math.sin(phi)
    return SymplecticTransform(np.array([[c, s], [-s, c]]), "rotation({:g})".format(phi))


def apply(transform, state, target_modes=None):
    if target_modes is None:
        target_modes = transform.acted_modes
    if target_modes is None:
        raise DomainError("No target modes given for {!r}".format(transform))
    targets = state.mode_indices(target_modes)
    if len(targets) != transform.arity:
        raise DomainError("{!r} acts on {} mode(s), got {}".format(
            transform, transform.arity, len(targets)))
    if len(set(targets)) != len(targets):
        raise DomainError("Repeated target modes {}".format(list(target_modes)))

    full = embed(transform, state.num_modes, targets)
    return GaussianState(full @ state.mean, full @ state.cov @ full.T, state.labels,
                         validate=False)


def embed(transform, n, targets):
    """The transform's matrix placed on `targets` inside the 2n x 2n identity"""
    full = np.eye(2 * n)
    idx = quadrature_indices(targets)
    full[np.ix_(idx, idx)] = transform.matrix
    return full


def symplectic_defect(matrix):
    """max |S Omega S^T - Omega|"""
    matrix = np.asarray(matrix)
    m = matrix.shape[0] // 2
    return float(np.max(np.abs(matrix @ omega(m) @ matrix.T - omega(m))))
