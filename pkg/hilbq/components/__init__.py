"""Chern character operators, vertex operators and the trace oracle."""

from .chern import (AdmissibilityError, ChernOp, chern_op, apply_G,
    chern_terms)
from .vertex import (VertexOp, apply_exp_mode, apply_gamma, apply_W,
    w_matrix_element, w_classes)
from .oracle import (TraceOperator, oracle_trace, oracle_F,
    oracle_trace_product, ch_terms, series_ch)

__all__ = ["AdmissibilityError", "ChernOp", "chern_op", "apply_G",
    "chern_terms", "VertexOp", "apply_exp_mode", "apply_gamma", "apply_W",
    "w_matrix_element", "w_classes", "TraceOperator", "oracle_trace",
    "oracle_F", "oracle_trace_product", "ch_terms", "series_ch"]
