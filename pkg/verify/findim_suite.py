import math

import numpy as np

from findim import (Entropies, DensityOperator, apply_isometry, apply_channel, purify,
                    relative_entropy, conditional_total_correlation, dual_total_correlation,
                    correlation_sum, continuity_gap, ghz_state, private_state, measure_key,
                    tripartite_key_state, key_state_defect, approximate_private_slack, esq_upper,
                    multipartite_esq_upper, dephasing_squasher, random_pure_state,
                    random_mixed_state, random_isometry, random_unitary, random_kraus)
from suite import Suite, invariant

QUBIT = 2


def qubits(labels):
    return (QUBIT,) * len(labels)


def random_private_state(rng, K=2):
    """K x K private state with a random mixed two-qubit shield and random twisting"""
    shield = random_mixed_state((2, 2), ["A'", "B'"], rng, ancilla_dim=2)
    blocks = {(i, j): random_unitary(4, rng) for i in range(K) for j in range(K)}
    return private_state(K, shield, blocks)


class FinitedimSuite(Suite):
    """Entropy identities and squashed-entanglement bounds on finite-dimensional states"""
    name = "findim"

    @invariant(tolerance=1e-10)
    def conditional_duality(self, rng):
        # I(A;B|E) = H(B|E) + H(B|D) on a pure state ABED
        h = Entropies(random_pure_state(qubits("ABED"), list("ABED"), rng))
        return abs(h.cqmi("A", "B", "E") - (h("BE") - h("E") + h("BD") - h("D")))

    @invariant(tolerance=1e-10)
    def cqmi_duality(self, rng):
        h = Entropies(random_pure_state(qubits("ABCD"), list("ABCD"), rng))
        return abs(h.cqmi("A", "B", "C") - h.cqmi("A", "B", "D"))

    @invariant(tolerance=1e-10)
    def squashed_subadditivity(self, rng):
        """
        For a pure input A'A B'E''F'' and an isometry A -> B E' F', the
        conditional mutual information of A' and BB' given E'E'' is at most
        H(B|E') + H(B|F') + I(A'A;B'|E'').
        """
        labels = ["A'", "A", "B'", "E''", "F''"]
        phi = random_pure_state(qubits(labels), labels, rng)
        psi = apply_isometry(phi, random_isometry(2, 8, rng), ["A"], ["B", "E'", "F'"], [2, 2, 2])
        h, h0 = Entropies(psi), Entropies(phi)
        left = h.cqmi(["A'"], ["B", "B'"], ["E'", "E''"])
        right = (h(["B", "E'"]) - h(["E'"]) + h(["B", "F'"]) - h(["F'"])
                 + h0.cqmi(["A'", "A"], ["B'"], ["E''"]))
        return left - right

    @invariant(tolerance=1e-10)
    def multipartite_duality(self, rng):
        labels = ["A1", "A2", "A3", "E", "F"]
        psi = random_pure_state(qubits(labels), labels, rng)
        h = Entropies(psi)
        parts = ["A1", "A2", "A3"]
        return abs(conditional_total_correlation(psi, parts, "E", h)
                   - dual_total_correlation(psi, parts, "F", h))

    @invariant(tolerance=1e-10)
    def multipartite_squashing_duality(self, rng):
        """Total correlation given E' equals dual total correlation given F under a Stinespring split"""
        parts = ["A1", "A2", "A3"]
        rho = random_mixed_state(qubits(parts), parts, rng, ancilla_dim=3)
        psi = purify(rho, "R")
        r = psi.dims[-1]
        omega = apply_isometry(psi, random_isometry(r, 2 * r, rng), ["R"], ["E'", "F"], [2, r])
        h = Entropies(omega)
        return abs(conditional_total_correlation(omega, parts, "E'", h)
                   - dual_total_correlation(omega, parts, "F", h))

    @invariant(tolerance=1e-10)
    def correlation_relation(self, rng):
        labels = ["A1", "A2", "A3", "E"]
        rho = random_mixed_state(qubits(labels), labels, rng)
        parts = labels[:3]
        h = Entropies(rho)
        return abs(conditional_total_correlation(rho, parts, "E", h) + dual_total_correlation(rho, parts, "E", h)
                   - correlation_sum(rho, parts, "E", h))

    @invariant(tolerance=1e-10)
    def mutual_information_bound(self, rng):
        rho = random_mixed_state((2, 3), ["A", "B"], rng)
        h = Entropies(rho)
        return h.cqmi("A", "B") - 2.0 * min(h("A"), h("B"))

    @invariant(tolerance=1e-9)
    def data_processing(self, rng):
        rho = random_mixed_state((3,), ["S"], rng)
        sigma = random_mixed_state((3,), ["S"], rng)
        kraus = random_kraus(3, 2, 3, rng)
        before = relative_entropy(rho, sigma)
        after = relative_entropy(apply_channel(rho, kraus, ["S"]), apply_channel(sigma, kraus, ["S"]))
        return after - before

    @invariant(tolerance=1e-10)
    def conditional_subadditivity(self, rng):
        # H(AB|CD) <= H(A|C) + H(B|D)
        h = Entropies(random_mixed_state(qubits("ABCD"), list("ABCD"), rng))
        return (h("ABCD") - h("CD")) - (h("AC") - h("C")) - (h("BD") - h("D"))

    @invariant(tolerance=1e-10)
    def grouping_monotonicity(self, rng):
        rho = random_mixed_state(qubits("ABC"), ["A1", "A2", "A3"], rng, ancilla_dim=4)
        grouped = multipartite_esq_upper(rho, [["A1", "A2"], ["A3"]])
        finer = multipartite_esq_upper(rho, [["A1"], ["A2"], ["A3"]])
        return grouped - finer

    @invariant(tolerance=1e-10, trials=1)
    def ghz_normalization(self, rng):
        worst = 0.0
        for m in (2, 3, 4):
            for K in (2, 3):
                ghz = ghz_state(m, K)
                target = 0.5 * m * math.log2(K)
                worst = max(worst, abs(0.5 * conditional_total_correlation(ghz, ghz.labels) - target),
                            abs(multipartite_esq_upper(ghz, ghz.labels) - target))
        return worst

    @invariant(tolerance=1e-10)
    def private_key_normalization(self, rng):
        """Every squashing candidate leaves at least log2 K bits on a private state"""
        gamma = random_private_state(rng)
        a, b = ["A", "A'"], ["B", "B'"]
        worst = -math.inf
        d = purify(gamma).dims[-1]
        for candidates in ([], [dephasing_squasher(d)]):
            worst = max(worst, 1.0 - esq_upper(gamma, a, b, candidates))
        return worst

    @invariant(tolerance=1e-10)
    def key_statistics(self, rng):
        gamma = random_private_state(rng)
        p = measure_key(gamma, ["A", "B"])
        uniform = np.max(np.abs(p - np.eye(2) / 2.0))
        defect = key_state_defect(tripartite_key_state(gamma, ["A", "B"]), ["A", "B"], ["E"])
        return max(uniform, defect)

    @invariant(tolerance=1e-10)
    def private_state_robustness(self, rng):
        gamma = random_private_state(rng)
        noise = random_mixed_state(gamma.dims, gamma.labels, rng)
        p = rng.uniform(0.0, 0.1)
        rho = DensityOperator((1.0 - p) * gamma.matrix + p * noise.matrix, gamma.dims, gamma.labels)
        esq = esq_upper(rho, ["A", "A'"], ["B", "B'"])
        return -approximate_private_slack(rho, gamma, 2, esq)

    @invariant(tolerance=1e-10)
    def squashed_continuity(self, rng):
        rho = random_mixed_state((2, 2), ["A", "B"], rng)
        noise = random_mixed_state((2, 2), ["A", "B"], rng)
        p = rng.uniform(0.0, 1.0) ** 3
        sigma = DensityOperator((1.0 - p) * rho.matrix + p * noise.matrix, rho.dims, rho.labels)
        change = abs(esq_upper(rho, "A", "B") - esq_upper(sigma, "A", "B"))
        return change - continuity_gap(rho, sigma, (2, 2))
