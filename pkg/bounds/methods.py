import collections
import logging

from errors import DomainError
from .channel import ChannelSpec, THERMAL, AMPLIFIER, decompose_amp_then_loss, eb_threshold
from .closed_form import pure_loss_bound, pure_amp_bound, plob_raw, limit_bound
from .config import CHANNEL_PARAMETER, required_parameters
from .engine import gew16_bound, dsw18_bound

logger = logging.getLogger(__name__)

FLAG_CLIPPED = "CLIPPED"
FLAG_EB = "EB"
FLAG_DOMAIN = "DOMAIN"

# Methods built on the amplifier-first decomposition
AMP_FIRST = ("dsw18", "limit")


class BoundPoint(collections.namedtuple(
        "BoundPoint", ["method", "kind", "eta", "nb", "ns", "gain", "xi", "squash_eta2", "squash_eta3"])):
    """One evaluation request; unused parameters are None"""
    __slots__ = ()

    def __new__(cls, method, kind=THERMAL, eta=None, nb=0.0, ns=None, gain=None, xi=None,
                squash_eta2=0.5, squash_eta3=0.5):
        return super().__new__(cls, method, kind, eta, nb, ns, gain, xi, squash_eta2, squash_eta3)

    def channel(self):
        if self.kind == THERMAL:
            return ChannelSpec.thermal(self.require("eta"), self.nb)
        if self.kind == AMPLIFIER:
            return ChannelSpec.amplifier(self.require("gain"), self.nb)
        return ChannelSpec.additive_noise(self.require("xi"))

    def require(self, name):
        value = getattr(self, name)
        if value is None:
            raise DomainError("Method '{}' needs parameter '{}'".format(self.method, name),
                              code="missing_parameter")
        return value

    def check_domain(self):
        """Channel-level domain errors take precedence over missing parameters"""
        name = CHANNEL_PARAMETER.get(self.kind)
        if self.method in AMP_FIRST and name and getattr(self, name) is not None:
            decompose_amp_then_loss(self.channel())
        return self

    def check_parameters(self):
        for name in required_parameters(self.method, self.kind):
            self.require(name)
        return self


class BoundResult(collections.namedtuple("BoundResult", ["bits", "raw", "flags"])):
    """`bits` is None when the point lies outside the method's domain"""
    __slots__ = ()

    @classmethod
    def value(cls, bits, flags=()):
        return cls(bits, bits, tuple(flags))

    @classmethod
    def missing(cls, flag):
        return cls(None, None, (flag,))


def eval_dsw18(p):
    return BoundResult.value(dsw18_bound(p.channel(), p.require("ns"), p.squash_eta2, p.squash_eta3))


def eval_gew16(p):
    return BoundResult.value(gew16_bound(p.channel(), p.require("ns"), p.squash_eta2, p.squash_eta3))


def eval_plob(p):
    raw = plob_raw(p.require("eta"), p.nb)
    if raw < 0.0 or p.eta <= eb_threshold(p.nb):
        return BoundResult(0.0, raw, (FLAG_CLIPPED,))
    return BoundResult.value(raw)


def eval_pure_loss(p):
    return BoundResult.value(pure_loss_bound(p.require("eta"), p.require("ns")))


def eval_pure_amp(p):
    return BoundResult.value(pure_amp_bound(p.require("gain"), p.require("ns")))


def eval_limit(p):
    """Infinite-energy limit of the amplifier-first bound"""
    d = decompose_amp_then_loss(p.channel())
    return BoundResult.value(limit_bound(d.T, d.G))


METHODS = collections.OrderedDict([
    ("dsw18", eval_dsw18),
    ("gew16", eval_gew16),
    ("plob", eval_plob),
    ("pure_loss", eval_pure_loss),
    ("pure_amp", eval_pure_amp),
    ("limit", eval_limit),
])


def evaluate(point, methods=None):
    """Evaluate one point; domain violations propagate as DomainError"""
    try:
        fn = (methods if methods is not None else METHODS)[point.method]
    except KeyError:
        raise DomainError("Unknown method '{}'".format(point.method), code="unknown_method")
    point.check_domain().check_parameters()
    return fn(point)


def evaluate_flagged(point, methods=None):
    """Like `evaluate`, but out-of-domain points come back flagged instead of raising"""
    try:
        return evaluate(point, methods)
    except DomainError as e:
        if e.code == "missing_parameter":
            raise
        flag = FLAG_EB if e.code == "entanglement_breaking" else FLAG_DOMAIN
        logger.debug("Skipping %s: %s", point, e)
        return BoundResult.missing(flag)
