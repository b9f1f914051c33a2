import math

import numpy as np
import pytest

from errors import DomainError, StateError
from findim import (DensityOperator, PureStateVector, partial_trace, tensor, permute, purify,
                    apply_isometry, apply_channel, dephase, basis_state, maximally_mixed, entropy,
                    marginal_entropy, relative_entropy, fidelity, trace_distance, mutual_information,
                    conditional_entropy, cqmi, conditional_total_correlation, dual_total_correlation,
                    correlation_sum, continuity_gap, ghz_state, twisting_unitary, private_state,
                    multipartite_private_state, measure_key, tripartite_key_state, key_state_defect,
                    approximate_private_slack, SquashingChannelParam, dephasing_squasher, esq_upper,
                    multipartite_esq_upper, random_mixed_state, random_kraus, random_unitary)


def bell():
    return PureStateVector(np.array([1, 0, 0, 1]) / math.sqrt(2), (2, 2), ["A", "B"])


def test_bell_marginal_is_maximally_mixed():
    rho = partial_trace(bell(), ["A"])
    np.testing.assert_allclose(rho.matrix, np.eye(2) / 2, atol=1e-15)
    assert entropy(rho) == pytest.approx(1.0)
    assert entropy(bell()) == 0.0
    assert marginal_entropy(bell(), ["B"]) == pytest.approx(1.0)


def test_invalid_density_operators():
    with pytest.raises(StateError):
        DensityOperator([[1.0, 0.5], [0.0, 0.0]])
    with pytest.raises(StateError):
        DensityOperator(np.eye(2))
    with pytest.raises(StateError):
        DensityOperator(np.diag([1.5, -0.5]))
    with pytest.raises(StateError):
        PureStateVector([1.0, 1.0])
    with pytest.raises(StateError):
        maximally_mixed((2, 2), ["A", "A"])


def test_purify_round_trip(rng):
    rho = random_mixed_state((3,), ["A"], rng)
    psi = purify(rho)
    assert psi.dims == (3, 3)
    np.testing.assert_allclose(partial_trace(psi, ["A"]).matrix, rho.matrix, atol=1e-12)
    assert marginal_entropy(psi, ["R"]) == pytest.approx(entropy(rho), abs=1e-12)


def test_purify_drops_null_space():
    assert purify(bell()).dims == (2, 2, 1)


def test_permute_and_tensor():
    state = tensor(basis_state((2,), (1,), ["A"]), basis_state((3,), (0,), ["B"]))
    moved = permute(state, ["B", "A"])
    assert moved.dims == (3, 2)
    assert moved.amplitudes[1] == 1.0
    with pytest.raises(DomainError):
        tensor(state, basis_state((2,), (0,), ["A"]))


def test_distances_between_orthogonal_states():
    zero = basis_state((2,), (0,)).to_density()
    one = basis_state((2,), (1,)).to_density()
    assert fidelity(zero, one) == pytest.approx(0.0, abs=1e-12)
    assert trace_distance(zero, one) == pytest.approx(2.0)
    assert relative_entropy(zero, one) == math.inf
    assert relative_entropy(zero, zero) == pytest.approx(0.0, abs=1e-12)
    assert relative_entropy(zero, maximally_mixed((2,))) == pytest.approx(1.0)


def test_distances_reject_mismatched_dimensions():
    with pytest.raises(DomainError):
        trace_distance(maximally_mixed((2,)), maximally_mixed((3,)))


def test_bell_information_quantities():
    assert mutual_information(bell(), "A", "B") == pytest.approx(2.0)
    assert conditional_entropy(bell(), "A", "B") == pytest.approx(-1.0)
    with pytest.raises(DomainError):
        cqmi(bell(), "A", "A")


def test_identity_isometry_leaves_state():
    out = apply_isometry(bell(), np.eye(2), ["A"])
    assert out.labels == ("A", "B")
    np.testing.assert_allclose(out.amplitudes, bell().amplitudes)
    with pytest.raises(StateError):
        apply_isometry(bell(), np.ones((2, 2)), ["A"])


def test_apply_channel_matches_kraus_sum(rng):
    rho = random_mixed_state((2,), ["A"], rng)
    kraus = random_kraus(2, 2, 3, rng)
    expected = sum(k @ rho.matrix @ k.conj().T for k in kraus)
    out = apply_channel(rho, kraus, ["A"])
    np.testing.assert_allclose(out.matrix, expected, atol=1e-12)


def test_unitary_preserves_entropy(rng):
    rho = random_mixed_state((2, 2), ["A", "B"], rng)
    out = apply_isometry(rho, random_unitary(4, rng), ["A", "B"], ["A", "B"], [2, 2])
    assert entropy(out) == pytest.approx(entropy(rho), abs=1e-10)


def test_dephase_removes_coherence():
    rho = dephase(bell(), ["A"])
    np.testing.assert_allclose(rho.matrix, np.diag([0.5, 0, 0, 0.5]), atol=1e-15)


def test_two_party_ghz_is_bell():
    np.testing.assert_allclose(ghz_state(2, 2, ["A", "B"]).amplitudes, bell().amplitudes)
    with pytest.raises(DomainError):
        ghz_state(1, 2)


def test_ghz_correlations():
    ghz = ghz_state(3, 2)
    parts = ["A1", "A2", "A3"]
    assert conditional_total_correlation(ghz, parts) == pytest.approx(3.0)
    assert dual_total_correlation(ghz, parts) == pytest.approx(3.0)
    assert correlation_sum(ghz, parts) == pytest.approx(6.0)
    assert conditional_total_correlation(ghz, ["A3", "A1", "A2"]) == pytest.approx(3.0)
    assert cqmi(ghz, "A1", "A2", "A3") == pytest.approx(1.0)
    assert conditional_total_correlation(ghz, ["A1", "A2"]) == pytest.approx(cqmi(ghz, "A2", "A1"))
    assert marginal_entropy(ghz_state(3, 3), ["A2"]) == pytest.approx(math.log2(3))


def test_ghz_squashed_normalization():
    ghz = ghz_state(3, 2)
    assert multipartite_esq_upper(ghz, ["A1", "A2", "A3"]) == pytest.approx(1.5, abs=1e-9)
    assert multipartite_esq_upper(ghz, ["A1", "A2", "A3"], kind="dual") == pytest.approx(1.5, abs=1e-9)


def test_esq_upper_examples(rng):
    assert esq_upper(bell(), "A", "B") == pytest.approx(1.0)
    assert esq_upper(bell(), "A", "B", restarts=1, rng=rng, maxfev=200) == pytest.approx(1.0, abs=1e-9)
    product = tensor(basis_state((2,), (0,), ["A"]), basis_state((2,), (1,), ["B"]))
    assert esq_upper(product, "A", "B") == pytest.approx(0.0, abs=1e-12)


def test_esq_upper_classical_correlation():
    rho = DensityOperator(np.diag([0.7, 0.0, 0.0, 0.3]), (2, 2), ["A", "B"])
    assert esq_upper(rho, "A", "B", [dephasing_squasher(2)]) == pytest.approx(0.0, abs=1e-9)


def test_continuity_gap():
    zero = basis_state((2,), (0,)).to_density()
    assert continuity_gap(zero, zero, (2, 2)) == 0.0
    assert continuity_gap(zero, maximally_mixed((2,)), (2, 4)) == pytest.approx(3.0)


def test_private_state_with_trivial_twisting():
    shield = basis_state((2,), (0,), ["A'"])
    gamma = private_state(2, shield)
    np.testing.assert_allclose(measure_key(gamma, ["A", "B"]), [[0.5, 0.0], [0.0, 0.5]], atol=1e-15)
    keys = tripartite_key_state(gamma, ["A", "B"])
    assert keys.labels == ("A", "B", "E")
    assert key_state_defect(keys, ["A", "B"], ["E"]) == pytest.approx(0.0, abs=1e-12)
    assert esq_upper(gamma, ["A"], ["B", "A'"]) == pytest.approx(1.0)


def test_twisted_private_state_keeps_key(rng):
    shield = basis_state((2, 2), (0, 0), ["A'", "B'"])
    blocks = {(i, j): random_unitary(4, rng) for i in range(2) for j in range(2)}
    gamma = private_state(2, shield, blocks)
    np.testing.assert_allclose(measure_key(gamma, ["A", "B"]), np.diag([0.5, 0.5]), atol=1e-12)
    assert esq_upper(gamma, ["A", "A'"], ["B", "B'"]) >= 1.0 - 1e-9


def test_twisting_validation():
    with pytest.raises(StateError):
        twisting_unitary(2, 2, 2, {(0, 0): 2.0 * np.eye(2)})
    with pytest.raises(DomainError):
        twisting_unitary(2, 2, 2, {(0, 2): np.eye(2)})
    with pytest.raises(DomainError):
        twisting_unitary(2, 2, 2, {(0, 0): np.eye(3)})


def test_squasher_completeness():
    with pytest.raises(StateError):
        SquashingChannelParam([0.5 * np.eye(2)])
    with pytest.raises(StateError):
        SquashingChannelParam([])


def test_approximate_private_slack_at_ideal_state():
    gamma = private_state(2, basis_state((2,), (0,), ["A'"]))
    assert approximate_private_slack(gamma, gamma, 2, 1.0) == pytest.approx(0.0, abs=1e-5)


def test_multipartite_private_state():
    shield = basis_state((2,), (1,), ["S"])
    gamma = multipartite_private_state(3, 2, shield, {(1, 1, 1): np.array([[0, 1], [1, 0]])})
    assert gamma.labels == ("A1", "A2", "A3", "S")
    probs = measure_key(gamma, ["A1", "A2", "A3"])
    assert probs[0, 0, 0] == pytest.approx(0.5)
    assert probs[1, 1, 1] == pytest.approx(0.5)
    assert probs.sum() == pytest.approx(1.0)
    keys = tripartite_key_state(gamma, ["A1", "A2", "A3"])
    assert key_state_defect(keys, ["A1", "A2", "A3"], ["E"]) == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(DomainError):
        multipartite_private_state(3, 2, basis_state((2,), (0,), ["A2"]))
