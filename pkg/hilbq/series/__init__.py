"""Exact truncated series in q with Laurent z-bookkeeping."""

from .zqseries import ZQSeries
from .utils import ArityError, to_fraction, format_fraction
from .series_ops import (euler_pow, block, coe_z0, q_ddq, sigma1_series,
    embed, series_sum)

__all__ = ["ZQSeries", "ArityError", "to_fraction", "format_fraction",
    "euler_pow", "block", "coe_z0", "q_ddq", "sigma1_series", "embed",
    "series_sum"]
