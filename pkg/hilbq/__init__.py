from .config import Settings
from .series import (ZQSeries, ArityError, euler_pow, block, coe_z0, q_ddq,
    sigma1_series, embed, series_sum)
from .base import (CohClass, GenPartition, ModelError, SingularMatrixError,
    SurfaceModel, PRESETS, preset, enum_balanced, stats, subtract)
from .fock import (FockVector, vacuum, basis_vector, apply_heisenberg,
    apply_a_sequence, apply_a_lambda, gram, pairing, trace_block)
from .components import (AdmissibilityError, ChernOp, chern_op, apply_G,
    VertexOp, apply_gamma, apply_W, oracle_F, oracle_trace_product, ch_terms,
    series_ch)
from .closedforms import (BracketSignature, mzv_bracket, signatures, theta,
    rmk914_trace, trace_pair_closed, closed_F0, closed_F1, closed_Fk_point,
    closed_ch1L, closed_chkL, UnderdeterminedError, ConstantsTable, b_table,
    fqxk_eval, extract_constants)
from .verify import (InsufficientSamplesError, chi_extrapolate, Report,
    run_identity, run_suite)
from .utils import load, resolve_models, pprint, pformat


__all__ = [
    "Settings", "ZQSeries", "ArityError", "euler_pow", "block", "coe_z0",
    "q_ddq", "sigma1_series", "embed", "series_sum", "CohClass",
    "GenPartition", "ModelError", "SingularMatrixError", "SurfaceModel",
    "PRESETS", "preset", "enum_balanced", "stats", "subtract", "FockVector",
    "vacuum", "basis_vector", "apply_heisenberg", "apply_a_sequence",
    "apply_a_lambda", "gram", "pairing", "trace_block",
    "AdmissibilityError", "ChernOp", "chern_op", "apply_G", "VertexOp",
    "apply_gamma", "apply_W", "oracle_F", "oracle_trace_product",
    "ch_terms", "series_ch", "BracketSignature", "mzv_bracket", "signatures",
    "theta", "rmk914_trace", "trace_pair_closed", "closed_F0", "closed_F1",
    "closed_Fk_point", "closed_ch1L", "closed_chkL", "UnderdeterminedError",
    "ConstantsTable", "b_table", "fqxk_eval", "extract_constants",
    "InsufficientSamplesError", "chi_extrapolate", "Report", "run_identity",
    "run_suite", "load", "resolve_models", "pprint", "pformat"
]
