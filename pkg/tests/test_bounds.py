import math

import numpy as np
import pytest

from bounds import (ChannelSpec, Decomposition, BoundPoint, decompose_loss_then_amp,
                    decompose_amp_then_loss, is_entanglement_breaking, eb_threshold, channel_output,
                    build_dilation, evaluate_objective, evaluate_objective_state,
                    random_energy_constrained_input, gew16_bound, dsw18_bound, pure_loss_bound,
                    pure_loss_limit, pure_amp_bound, plob_raw, plob_bound, limit_bound, evaluate,
                    evaluate_flagged, LOSS_THEN_AMP, AMP_THEN_LOSS)
from bounds.methods import FLAG_CLIPPED, FLAG_DOMAIN, FLAG_EB
from errors import DomainError
from gaussian import g, thermal_state, vacuum_state, reduce, symplectic_eigenvalues, mean_photon_number


def test_loss_then_amp_decomposition():
    d = decompose_loss_then_amp(ChannelSpec.thermal(0.6, 0.25))
    assert d.order == LOSS_THEN_AMP
    assert d.G == pytest.approx(1.1)
    assert d.T == pytest.approx(0.6 / 1.1)
    d = decompose_loss_then_amp(ChannelSpec.additive_noise(1.0))
    assert (d.T, d.G) == pytest.approx((0.5, 2.0))
    d = decompose_loss_then_amp(ChannelSpec.thermal(0.3, 0.0))
    assert (d.T, d.G) == pytest.approx((0.3, 1.0))


def test_amp_then_loss_decomposition():
    d = decompose_amp_then_loss(ChannelSpec.thermal(0.6, 0.25))
    assert d.order == AMP_THEN_LOSS
    assert (d.T, d.G) == pytest.approx((0.5, 1.2))
    d = decompose_amp_then_loss(ChannelSpec.thermal(0.7, 0.0))
    assert (d.T, d.G) == pytest.approx((0.7, 1.0))


def test_amp_then_loss_rejects_entanglement_breaking():
    with pytest.raises(DomainError) as e:
        decompose_amp_then_loss(ChannelSpec.thermal(0.5, 1.0))
    assert e.value.code == "entanglement_breaking"
    with pytest.raises(DomainError) as e:
        decompose_amp_then_loss(ChannelSpec.amplifier(2.0))
    assert e.value.code == "unsupported_kind"


def test_entanglement_breaking_test():
    assert is_entanglement_breaking(ChannelSpec.thermal(0.5, 1.0))
    assert not is_entanglement_breaking(ChannelSpec.thermal(0.9, 0.0))
    assert not is_entanglement_breaking(ChannelSpec.additive_noise(0.5))
    assert is_entanglement_breaking(ChannelSpec.additive_noise(1.0))
    assert eb_threshold(1.0) == 0.5


@pytest.mark.parametrize("kwargs", [
    dict(kind="thermal", eta=1.0, nb=0.0),
    dict(kind="thermal", eta=0.5, nb=-1.0),
    dict(kind="amplifier", gain=1.0),
    dict(kind="additive_noise", xi=-0.1),
    dict(kind="lossy"),
])
def test_channel_parameter_domain(kwargs):
    with pytest.raises(DomainError):
        ChannelSpec(**kwargs)


def test_decomposition_reproduces_channel(rng):
    channels = [ChannelSpec.thermal(0.8, 0.3), ChannelSpec.amplifier(2.5, 0.4), ChannelSpec.additive_noise(0.3)]
    for ch in channels:
        cov = thermal_state(rng.uniform(0.0, 3.0)).cov
        for d in [decompose_loss_then_amp(ch)] + ([decompose_amp_then_loss(ch)] if ch.kind != "amplifier" else []):
            np.testing.assert_allclose(d.apply_cov(cov), ch.apply_cov(cov), atol=1e-12)


def test_mismatched_decomposition_rejected():
    with pytest.raises(DomainError) as e:
        Decomposition(LOSS_THEN_AMP, 0.5, 1.5, source=ChannelSpec.thermal(0.6, 0.25))
    assert e.value.code == "decomposition_mismatch"


def test_channel_output_thermal():
    out = channel_output(ChannelSpec.thermal(0.6, 0.25), thermal_state(1.0))
    assert mean_photon_number(out, 0) == pytest.approx(0.6 * 1.0 + 0.4 * 0.25)


def test_dilation_structure():
    chain = build_dilation(decompose_amp_then_loss(ChannelSpec.thermal(0.9, 0.1)))
    assert chain.num_modes == 5
    out = chain.run(vacuum_state(1))
    assert sorted(out.labels) == sorted(["B", "E1'", "E2'", "F1'", "F2'"])
    assert max(symplectic_eigenvalues(out)) == pytest.approx(1.0, abs=1e-9)


def test_identity_dilation_passes_input():
    chain = build_dilation(Decomposition(LOSS_THEN_AMP, 1.0, 1.0))
    out = chain.run(thermal_state(0.3))
    np.testing.assert_allclose(reduce(out, ["B"]).cov, thermal_state(0.3).cov, atol=1e-12)


def test_dilation_squashing_range():
    with pytest.raises(DomainError):
        build_dilation(Decomposition(LOSS_THEN_AMP, 0.5, 1.0), eta2=1.0)


def test_objective_symmetric_for_even_squashing():
    chain = build_dilation(decompose_loss_then_amp(ChannelSpec.thermal(0.9, 0.1)))
    value = evaluate_objective(chain, 0.1)
    assert value.h_be == pytest.approx(value.h_bf, abs=1e-9)


def test_thermal_input_beats_random_inputs(rng):
    chain = build_dilation(decompose_amp_then_loss(ChannelSpec.thermal(0.8, 0.2)))
    best = sum(evaluate_objective(chain, 0.5))
    for _ in range(20):
        state = random_energy_constrained_input(0.5, rng)
        assert mean_photon_number(state, 0) <= 0.5 + 1e-12
        assert sum(evaluate_objective_state(chain, state)) <= best + 1e-9


def test_pure_loss_bound_values():
    assert pure_loss_bound(1.0, 0.3) == pytest.approx(g(0.3))
    assert pure_loss_bound(0.0, 0.3) == 0.0
    assert pure_loss_bound(0.5, 0.1) == pytest.approx(g(0.075) - g(0.025))
    assert pure_loss_bound(0.5, 0.1) == pytest.approx(0.2229, abs=1e-4)
    assert pure_loss_limit(1.0) == math.inf
    assert pure_loss_bound(0.9, 50.0) < pure_loss_limit(0.9)


def test_pure_amp_bound_values():
    assert pure_amp_bound(1.0, 0.4) == pytest.approx(g(0.4))
    assert pure_amp_bound(3.0, 0.0) == 0.0
    assert pure_amp_bound(2.0, 1.0) == pytest.approx(0.754888, abs=1e-6)


def test_plob_values():
    assert plob_bound(0.3, 0.0) == pytest.approx(-math.log2(0.7))
    assert plob_bound(0.5, 1.0) == 0.0
    assert plob_bound(0.9, 1.0) == pytest.approx(1.473931, abs=1e-6)
    assert plob_raw(0.3, 1.0) > 0.0
    assert plob_raw(0.5, 1.0) == pytest.approx(0.0, abs=1e-12)
    assert plob_bound(0.3, 1.0) == 0.0
    with pytest.raises(DomainError):
        plob_raw(1.0, 0.0)


def test_limit_bound_edges():
    assert limit_bound(1.0, 1.0) == math.inf
    assert limit_bound(0.5, 1.0) == pytest.approx(math.log2(3.0))
    assert limit_bound(1.0, 3.0) == pytest.approx(1.0)
    assert limit_bound(0.5, 1.0 + 1e-9) == pytest.approx(math.log2(3.0), abs=1e-6)
    assert limit_bound(1e-6, 2.0) < 1e-5


def test_limit_bound_continuous_at_singularity():
    assert limit_bound(0.5, 2.0) == pytest.approx(limit_bound(0.5, 2.0 + 1e-6), abs=1e-5)


def test_bounds_reduce_to_pure_loss():
    ch = ChannelSpec.thermal(0.7, 0.0)
    assert gew16_bound(ch, 0.4) == pytest.approx(pure_loss_bound(0.7, 0.4), abs=1e-9)
    assert dsw18_bound(ch, 0.4) == pytest.approx(pure_loss_bound(0.7, 0.4), abs=1e-9)


def test_gew16_reduces_to_pure_amplifier():
    ch = ChannelSpec.amplifier(2.0, 0.0)
    assert gew16_bound(ch, 1.0) == pytest.approx(pure_amp_bound(2.0, 1.0), abs=1e-9)


def test_dsw18_is_tighter_than_gew16():
    for eta in (0.6, 0.75, 0.9):
        ch = ChannelSpec.thermal(eta, 1.0)
        assert dsw18_bound(ch, 0.1) <= gew16_bound(ch, 0.1) + 1e-9


@pytest.mark.parametrize("method, eta, nb, expected", [
    (dsw18_bound, 0.9, 1.0, 0.243504446663),
    (gew16_bound, 0.75, 1.0, 0.146663496179),
    (gew16_bound, 0.9, 0.1, 0.388500081278),
    (dsw18_bound, 0.9, 0.1, 0.385501927358),
])
def test_engine_reference_values(method, eta, nb, expected):
    assert method(ChannelSpec.thermal(eta, nb), 0.1) == pytest.approx(expected, abs=1e-9)


@pytest.mark.parametrize("eta", [0.5005, 0.505, 0.52, 0.6])
def test_dsw18_below_plob_near_entanglement_breaking(eta):
    assert dsw18_bound(ChannelSpec.thermal(eta, 1.0), 0.1) <= plob_bound(eta, 1.0)


@pytest.mark.parametrize("eta", [0.9, 0.95])
def test_dsw18_below_plob(eta):
    assert dsw18_bound(ChannelSpec.thermal(eta, 1.0), 0.1) < plob_bound(eta, 1.0)


def test_dsw18_vanishes_near_entanglement_breaking():
    assert dsw18_bound(ChannelSpec.thermal(0.5001, 1.0), 0.1) < 0.05
    d = decompose_amp_then_loss(ChannelSpec.thermal(0.5001, 1.0))
    assert limit_bound(d.T, d.G) < 1e-3


def test_dsw18_thermal_only():
    with pytest.raises(DomainError) as e:
        dsw18_bound(ChannelSpec.additive_noise(0.2), 0.1)
    assert e.value.code == "unsupported_kind"


def test_dsw18_approaches_limit():
    ch = ChannelSpec.thermal(0.8, 0.2)
    d = decompose_amp_then_loss(ch)
    assert dsw18_bound(ch, 1e6) == pytest.approx(limit_bound(d.T, d.G), abs=1e-3)


def test_low_noise_bounds_agree():
    ch = ChannelSpec.thermal(0.1, 3e-7)
    for ns in (0.0, 0.25, 1.0):
        assert dsw18_bound(ch, ns) == pytest.approx(gew16_bound(ch, ns), abs=1e-4)


def test_noisy_channel_separates_bounds():
    ch = ChannelSpec.thermal(0.1, 0.1)
    assert gew16_bound(ch, 1.0) - dsw18_bound(ch, 1.0) > 0.01


def test_evaluate_points():
    assert evaluate(BoundPoint("pure_loss", eta=1.0, ns=1.0)).bits == pytest.approx(2.0)
    result = evaluate(BoundPoint("plob", eta=0.3, nb=1.0))
    assert result.bits == 0.0
    assert result.raw > 0.0
    assert result.flags == (FLAG_CLIPPED,)
    with pytest.raises(DomainError) as e:
        evaluate(BoundPoint("nope", eta=0.5))
    assert e.value.code == "unknown_method"


def test_entanglement_breaking_reported_before_missing_energy():
    with pytest.raises(DomainError) as e:
        evaluate(BoundPoint("dsw18", eta=0.4, nb=1.0))
    assert e.value.code == "entanglement_breaking"
    with pytest.raises(DomainError) as e:
        evaluate(BoundPoint("dsw18", eta=0.9, nb=1.0))
    assert e.value.code == "missing_parameter"


def test_evaluate_flagged_points():
    assert evaluate_flagged(BoundPoint("dsw18", eta=0.5, nb=1.0, ns=0.1)).flags == (FLAG_EB,)
    assert evaluate_flagged(BoundPoint("dsw18", eta=1.0, nb=1.0, ns=0.1)).flags == (FLAG_DOMAIN,)
    missing = evaluate_flagged(BoundPoint("plob", eta=1.0, nb=1.0))
    assert missing.bits is None
    assert missing.flags == (FLAG_DOMAIN,)
