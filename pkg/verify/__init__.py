import collections

from .gaussian_suite import GaussianSuite
from .bounds_suite import BoundsSuite
from .broadcast_suite import BroadcastSuite
from .findim_suite import FinitedimSuite

SUITES = collections.OrderedDict(
    (cls.name, cls) for cls in (GaussianSuite, BoundsSuite, BroadcastSuite, FinitedimSuite))
