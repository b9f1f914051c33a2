import logging

from errors import DomainError
from .channel import THERMAL, decompose_loss_then_amp, decompose_amp_then_loss
from .dilation import build_dilation, evaluate_objective

logger = logging.getLogger(__name__)


def gew16_bound(ch, ns, eta2=0.5, eta3=0.5):
    """Half the sum of both squashed conditional entropies, loss stage first"""
    chain = build_dilation(decompose_loss_then_amp(ch), eta2, eta3)
    value = evaluate_objective(chain, ns)
    return max(0.0, 0.5 * (value.h_be + value.h_bf))


def dsw18_bound(ch, ns, eta2=0.5, eta3=0.5):
    """H(B|E1'E2') of the amplifier-first dilation; thermal channels only"""
    if ch.kind != THERMAL:
        raise DomainError("dsw18 bound is stated for thermal channels, got {}".format(ch.kind),
                          code="unsupported_kind")
    chain = build_dilation(decompose_amp_then_loss(ch), eta2, eta3)
    return max(0.0, evaluate_objective(chain, ns).h_be)
