"""Closed-form series: q-zeta brackets, trace formulas and constants."""

from .brackets import (Slot, BracketSignature, mzv_bracket, signatures,
    signed_bracket_sums)
from .formulas import (theta, lambda_product, rmk914_trace,
    trace_pair_closed, closed_F0, first_order_bracket, closed_F1,
    closed_Fk_point, closed_ch1L, closed_chkL)
from .constants import (UnderdeterminedError, ConstantsTable, b_table,
    fqxk_eval, FirstOrderSample, extract_constants)

__all__ = ["Slot", "BracketSignature", "mzv_bracket", "signatures",
    "signed_bracket_sums", "theta", "lambda_product", "rmk914_trace",
    "trace_pair_closed", "closed_F0", "first_order_bracket", "closed_F1",
    "closed_Fk_point", "closed_ch1L", "closed_chkL", "UnderdeterminedError",
    "ConstantsTable", "b_table", "fqxk_eval", "FirstOrderSample",
    "extract_constants"]
