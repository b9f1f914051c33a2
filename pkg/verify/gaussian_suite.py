import numpy as np

from gaussian import (g, entropy, conditional_entropy, apply, tensor, symplectic_defect,
                      random_symplectic, random_gaussian_state)
from suite import Suite, invariant


class GaussianSuite(Suite):
    """Entropy and symplectic bookkeeping of the Gaussian formalism"""
    name = "gaussian"

    @invariant(tolerance=1e-10)
    def symplectic_closure(self, rng):
        n = int(rng.integers(1, 4))
        a = random_symplectic(n, rng)
        b = random_symplectic(n, rng)
        return symplectic_defect(b.matrix @ a.matrix)

    @invariant(tolerance=1e-10)
    def entropy_invariance(self, rng):
        n = int(rng.integers(1, 4))
        state = random_gaussian_state(n, rng)
        moved = apply(random_symplectic(n, rng), state, list(range(n)))
        return abs(entropy(moved) - entropy(state))

    @invariant(tolerance=1e-9)
    def purity(self, rng):
        n = int(rng.integers(1, 4))
        return abs(random_gaussian_state(n, rng, pure=True).purity_defect())

    @invariant(tolerance=1e-12)
    def additivity(self, rng):
        a = random_gaussian_state(int(rng.integers(1, 3)), rng)
        b = random_gaussian_state(int(rng.integers(1, 3)), rng)
        b = b.with_labels(["n{}".format(k) for k in range(b.num_modes)])
        return abs(entropy(tensor(a, b)) - entropy(a) - entropy(b))

    @invariant(tolerance=1e-9)
    def pure_state_duality(self, rng):
        # H(A|B) = -H(A|C) on a pure tripartite state
        state = random_gaussian_state(3, rng, pure=True, labels=["A", "B", "C"])
        return abs(conditional_entropy(state, ["A"], ["B"]) + conditional_entropy(state, ["A"], ["C"]))

    @invariant(tolerance=1e-12, trials=1)
    def g_shape(self, rng):
        x = np.arange(0.0, 10.0, 0.01)
        y = g(x)
        rising = max(0.0, -float(np.min(np.diff(y))))
        concave = max(0.0, float(np.max(np.diff(y, 2))))
        anchors = max(abs(g(0.0)), abs(g(1.0) - 2.0))
        return max(rising, concave, anchors)
