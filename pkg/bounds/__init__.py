from .channel import (ChannelSpec, Decomposition, decompose_loss_then_amp, decompose_amp_then_loss,
                      is_entanglement_breaking, eb_threshold, channel_output,
                      THERMAL, AMPLIFIER, ADDITIVE_NOISE, LOSS_THEN_AMP, AMP_THEN_LOSS)
from .dilation import (DilationChain, ObjectiveValue, build_dilation, evaluate_objective,
                       evaluate_objective_state, random_energy_constrained_input)
from .closed_form import (pure_loss_bound, pure_loss_limit, pure_amp_bound, plob_raw, plob_bound,
                          limit_bound)
from .engine import gew16_bound, dsw18_bound
from .methods import BoundPoint, BoundResult, METHODS, evaluate, evaluate_flagged
from .config import SweepSpec, validate_sweep
