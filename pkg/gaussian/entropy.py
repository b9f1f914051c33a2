import math

import numpy as np

from errors import DomainError
from .state import reduce, symplectic_eigenvalues

LN2 = math.log(2.0)
G_FLOOR = 1e-15


def g(x):
    """
    Entropy in bits of a thermal mode with mean photon number x:
    g(x) = (1+x) log2(1+x) - x log2(x), with g(0) = 0.

    Evaluated as [log1p(x) + x log1p(1/x)] / ln 2, which is free of the
    cancellation the textbook form suffers at both small and large x.
    Accepts scalars or arrays.
    """
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0) or np.any(np.isnan(arr)):
        raise DomainError("g is defined for x >= 0, got {}".format(x))
    mask = arr >= G_FLOOR
    xs = np.where(mask, arr, 1.0)
    out = np.where(mask, (np.log1p(xs) + xs * np.log1p(1.0 / xs)) / LN2, 0.0)
    if out.ndim == 0:
        return float(out)
    return out


def entropy(state, modes=None):
    if modes is not None:
        state = reduce(state, modes)
    nu = np.asarray(symplectic_eigenvalues(state))
    return float(np.sum(g(np.maximum((nu - 1.0) / 2.0, 0.0))))


def _check_disjoint(modes_a, modes_b, state):
    ia = state.mode_indices(modes_a)
    ib = state.mode_indices(modes_b)
    if not ia or not ib:
        raise DomainError("Mode sets must be non-empty")
    if set(ia) & set(ib):
        raise DomainError("Mode sets overlap: {} and {}".format(list(modes_a), list(modes_b)))
    return ia, ib


def conditional_entropy(state, modes_a, modes_b):
    """H(A|B) = H(AB) - H(B); may be negative"""
    ia, ib = _check_disjoint(modes_a, modes_b, state)
    return entropy(state, ia + ib) - entropy(state, ib)


def mutual_information(state, modes_a, modes_b):
    ia, ib = _check_disjoint(modes_a, modes_b, state)
    return entropy(state, ia) + entropy(state, ib) - entropy(state, ia + ib)
