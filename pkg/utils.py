import logging
import math
import os

logger = logging.getLogger(__name__)

SIG_DIGITS = 12
SCI_BELOW = 1e-4


def format_float(value, precision=SIG_DIGITS):
    """Fixed-width-free float text: `precision` significant digits, scientific below 1e-4"""
    if value is None:
        return ""
    value = float(value)
    if math.isnan(value):
        return ""
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if value == 0.0:
        return "0"
    if abs(value) < SCI_BELOW:
        return "{0:.{1}e}".format(value, precision - 1)
    return "{0:.{1}g}".format(value, precision)


def grid(start, stop, step):
    """Inclusive arithmetic grid, robust against accumulated rounding"""
    if step <= 0:
        raise ValueError("step must be positive")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    if count < 1:
        return []
    return [round(start + i * step, 12) for i in range(count)]


def thread_count(default=None):
    """Worker cap from BB_THREADS, falling back to the CPU count"""
    raw = os.environ.get("BB_THREADS")
    if raw is None:
        return default or max(1, os.cpu_count() or 1)
    try:
        value = int(raw)
        if value < 1:
            raise ValueError()
        return value
    except ValueError:
        logger.warning("Ignoring invalid BB_THREADS=%r, using 1 thread", raw)
        return 1