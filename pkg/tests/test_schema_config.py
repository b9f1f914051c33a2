import io
import json

import pytest

from bounds import SweepSpec
from broadcast import BroadcastConfig
from configLoader import ConfigLoader
from errors import ConfigError
from schema import TFloat, TInt, TList, TString
from utils import format_float, grid, thread_count


@pytest.fixture
def loader():
    loader = ConfigLoader()
    loader.registerType(SweepSpec)
    loader.registerType(BroadcastConfig)
    return loader


@pytest.mark.parametrize("dtype, value", [
    (TFloat(0.0, minimum=0.0, maximum=1.0), 1.5),
    (TFloat(), "x"),
    (TFloat(), float("nan")),
    (TInt(), 1.5),
    (TInt(minimum=1), 0),
    (TInt(), True),
    (TInt(), "x"),
    (TString(choices=("a", "b")), "c"),
    (TList(TString(), min_length=1), []),
    (TList(TString()), "abc"),
])
def test_field_validation(dtype, value):
    with pytest.raises(ConfigError):
        dtype(value)


def test_field_defaults():
    assert TFloat(0.25)() == 0.25
    assert TFloat(None, allow_none=True)() is None
    assert TInt(3)() == 3
    assert list(TList(TString(), default=["x"])()) == ["x"]


def test_sweep_spec_defaults():
    spec = SweepSpec()
    assert list(spec.methods) == ["dsw18", "gew16", "plob"]
    assert spec.variable == "eta"
    assert spec.step == 0.005
    assert spec.ns is None
    assert spec.precision == 12


def test_sweep_spec_updated_ignores_none():
    spec = SweepSpec({"ns": 0.1}).updated(ns=None, eta=0.7, methods=["plob"])
    assert spec.ns == 0.1
    assert spec.eta == 0.7
    assert list(spec.methods) == ["plob"]


def test_sweep_spec_rejects_unknown_method():
    with pytest.raises(ConfigError):
        SweepSpec({"methods": ["nope"]})


def test_loader_dispatches_on_type(loader):
    data = loader.loadString('{"type": "broadcast", "receivers": {"B": 0.3}, "ns": 0.5}')
    assert isinstance(data, BroadcastConfig)
    assert data.ns == 0.5
    data = loader.loadFile(io.StringIO('{"type": "sweep", "variable": "ns"}'))
    assert isinstance(data, SweepSpec)
    assert data.variable == "ns"


def test_loader_default_type(loader):
    assert isinstance(loader.loadString('{"ns": 0.5}', "broadcast"), BroadcastConfig)
    with pytest.raises(ConfigError):
        loader.loadString('{"ns": 0.5}')


def test_broadcast_config_round_trip(loader):
    config = loader.loadString('{"type": "broadcast", "receivers": {"B": 0.3, "C": 0.4}, "ns": 0.1}')
    assert dict(config.receivers) == {"B": 0.3, "C": 0.4}
    saved = json.loads(loader.saveString(config))
    assert saved["receivers"] == {"B": 0.3, "C": 0.4}
    assert saved["precision"] == 12
    assert loader.loadString(loader.saveString(config)).serialize() == saved


def test_fields_validate_on_assignment():
    config = BroadcastConfig({"receivers": {"B": 0.3}})
    config.ns = 2
    assert config.ns == 2.0
    with pytest.raises(ConfigError):
        config.ns = -1.0
    with pytest.raises(ConfigError):
        BroadcastConfig({"receivers": [0.3]})
    with pytest.raises(ConfigError):
        BroadcastConfig({"receivers": {"B": 1.5}})


@pytest.mark.parametrize("text", ['{"type": ', '[1, 2]', '{"type": "scan"}'])
def test_loader_errors(loader, text):
    with pytest.raises(ConfigError):
        loader.loadString(text)


def test_loader_save_keeps_extras(loader):
    spec = loader.loadString('{"type": "sweep", "note": "fig", "ns": 0.2}')
    saved = json.loads(loader.saveString(spec))
    assert saved["note"] == "fig"
    assert saved["ns"] == 0.2
    assert saved["type"] == "sweep"
    assert loader.loadString(loader.saveString(spec)).serialize() == spec.serialize()


def test_format_float():
    assert format_float(None) == ""
    assert format_float(0.0) == "0"
    assert format_float(0.1) == "0.1"
    assert format_float(1.0) == "1"
    assert format_float(1e-5) == "1.00000000000e-05"
    assert format_float(float("inf")) == "inf"
    assert format_float(2.0 / 3.0, 4) == "0.6667"


def test_grid_is_inclusive():
    assert grid(0.0, 1.0, 0.25) == [0.0, 0.25, 0.5, 0.75, 1.0]
    assert len(grid(0.5, 1.0, 0.005)) == 101
    assert grid(0.0, 1.0, 0.01)[-1] == 1.0
    with pytest.raises(ValueError):
        grid(0.0, 1.0, 0.0)


def test_thread_count(monkeypatch):
    monkeypatch.setenv("BB_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("BB_THREADS", "zero")
    assert thread_count() == 1
    monkeypatch.delenv("BB_THREADS")
    assert thread_count(5) == 5
