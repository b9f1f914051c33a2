from errors import ConfigError
from schema import TFloat, TInt, TList, TObject, TString

METHODS = ("dsw18", "gew16", "plob", "pure_loss", "pure_amp", "limit")
KINDS = ("thermal", "amplifier", "additive_noise")


class SweepSpec(TObject):
    type_ = TString("sweep")
    methods = TList(TString(choices=METHODS), default=["dsw18", "gew16", "plob"], min_length=1)
    variable = TString("eta", choices=("eta", "ns"))
    start = TFloat(0.5)
    stop = TFloat(1.0)
    step = TFloat(0.005)
    kind = TString("thermal", choices=KINDS)
    eta = TFloat(None, minimum=0.0, maximum=1.0, allow_none=True)
    nb = TFloat(0.0, minimum=0.0)
    ns = TFloat(None, minimum=0.0, allow_none=True)
    gain = TFloat(None, minimum=1.0, allow_none=True)
    xi = TFloat(None, minimum=0.0, allow_none=True)
    squash_eta2 = TFloat(0.5, minimum=0.0, maximum=1.0)
    squash_eta3 = TFloat(0.5, minimum=0.0, maximum=1.0)
    out = TString()
    precision = TInt(12, minimum=1, maximum=17)


def validate_sweep(spec):
    """Cross-field checks that the field descriptors cannot express"""
    if not spec.step > 0.0:
        raise ConfigError("Sweep step must be positive, got {}".format(spec.step))
    if spec.stop < spec.start:
        raise ConfigError("Sweep stop {} is below start {}".format(spec.stop, spec.start))
    if spec.variable == "ns" and spec.start < 0.0:
        raise ConfigError("Photon-number sweeps must start at or above 0")
    for method in spec.methods:
        for name in required_parameters(method, spec.kind):
            if name != spec.variable and getattr(spec, name) is None:
                raise ConfigError("Method '{}' needs a fixed {}".format(method, name))
    return spec


CHANNEL_PARAMETER = {"thermal": "eta", "amplifier": "gain", "additive_noise": "xi"}


def required_parameters(method, kind="thermal"):
    if method == "plob":
        return ("eta",)
    if method == "pure_loss":
        return ("eta", "ns")
    if method == "pure_amp":
        return ("gain", "ns")
    if method == "limit":
        return (CHANNEL_PARAMETER[kind],)
    return (CHANNEL_PARAMETER[kind], "ns")
