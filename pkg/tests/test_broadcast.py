import math

import pytest

from bounds import pure_loss_bound
from broadcast import (BroadcastConfig, BroadcastSpec, broadcast_bound, broadcast_bound_limit,
                       broadcast_region, cascade_transmissivities, broadcast_output,
                       broadcast_gaussian_check, broadcast_objective_state)
from errors import DomainError
from gaussian import g, thermal_state, mean_photon_number


@pytest.fixture
def spec():
    return BroadcastSpec.from_pairs(["B=0.3", "C=0.4"])


@pytest.mark.parametrize("receivers", [{"B": 0.6, "C": 0.5}, {"S": 0.2}, {"E1": 0.2}, {"B": 1.2}, {}])
def test_invalid_broadcast_channels(receivers):
    with pytest.raises(DomainError):
        BroadcastSpec(receivers)


@pytest.mark.parametrize("pairs", [["B0.3"], ["=0.3"], ["B=x"], ["B=0.1", "B=0.2"]])
def test_invalid_pairs(pairs):
    with pytest.raises(DomainError):
        BroadcastSpec.from_pairs(pairs)


def test_from_pairs_keeps_order(spec):
    assert spec.names == ["B", "C"]
    assert spec.eta_total == pytest.approx(0.7)
    assert spec.eta_eve == pytest.approx(0.3)
    assert spec.split(["C"]) == pytest.approx((0.4, 0.3))


def test_split_rejects_bad_subsets(spec):
    for subset in ([], ["D"], ["B", "B"]):
        with pytest.raises(DomainError):
            spec.split(subset)


def test_bound_values(spec):
    assert broadcast_bound(spec, ["B"], 0.1) == pytest.approx(g(0.045) - g(0.015))
    assert broadcast_bound(spec, ["C"], 0.1) == pytest.approx(g(0.055) - g(0.015), abs=1e-12)
    assert broadcast_bound(spec, ["B", "C"], 0.1) == pytest.approx(g(0.085) - g(0.015))
    assert broadcast_bound(spec, ["B", "C"], 0.0) == 0.0


def test_limit_values(spec):
    assert broadcast_bound_limit(spec, ["B", "C"]) == pytest.approx(math.log2(1.7 / 0.3))
    assert broadcast_bound_limit(spec, ["B"]) == pytest.approx(math.log2(3.0))
    assert broadcast_bound_limit(BroadcastSpec({"B": 0.5, "C": 0.5}), ["B"]) == math.inf


def test_region_order(spec):
    region = broadcast_region(spec, 0.1)
    assert list(region) == [("B",), ("C",), ("B", "C")]
    assert region[("B",)] <= region[("B", "C")]


def test_single_receiver_reduces_to_pure_loss():
    spec = BroadcastSpec({"B": 0.5})
    assert broadcast_bound(spec, ["B"], 1.0) == pytest.approx(pure_loss_bound(0.5, 1.0), abs=1e-12)


def test_symmetric_receivers_give_equal_bounds():
    region = broadcast_region(BroadcastSpec({"B": 0.2, "C": 0.2, "D": 0.2}), 0.5)
    assert region[("B",)] == pytest.approx(region[("D",)])
    assert region[("B", "C")] == pytest.approx(region[("C", "D")])


def test_cascade_transmissivities(spec):
    assert cascade_transmissivities(spec) == pytest.approx([0.7, 1.0 - 0.4 / 0.7])


def test_cascade_delivers_transmissivities(spec):
    out = broadcast_output(spec, thermal_state(1.0))
    assert mean_photon_number(out, "B") == pytest.approx(0.3)
    assert mean_photon_number(out, "C") == pytest.approx(0.4)
    assert mean_photon_number(out, "E1") + mean_photon_number(out, "E2") == pytest.approx(0.3)


def test_gaussian_check_matches_closed_form(spec):
    for subset in (["B"], ["C"], ["B", "C"]):
        assert broadcast_gaussian_check(spec, subset, 0.1) == pytest.approx(
            broadcast_bound(spec, subset, 0.1), abs=1e-10)


def test_objective_at_thermal_input(spec):
    value = broadcast_objective_state(spec, ["B", "C"], thermal_state(0.1))
    assert value == pytest.approx(broadcast_bound(spec, ["B", "C"], 0.1), abs=1e-10)


def test_broadcast_config():
    config = BroadcastConfig({"receivers": {"B": 0.3, "C": 0.4}, "ns": 0.1})
    assert config.type_ == "broadcast"
    assert dict(config.receivers) == {"B": 0.3, "C": 0.4}
    assert config.precision == 12
