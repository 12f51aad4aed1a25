"""Fock space vectors, Heisenberg operators, pairing and traces."""

from .fockvector import (FockVector, ZGraded, inplace, vacuum, basis_vector,
    graded_add, freeze_graded)
from .heisenberg import (apply_basis, apply_heisenberg, apply_a_sequence,
    apply_a_lambda, apply_creators)
from .pairing import (weight_basis, pair_monomials, pairing, gram,
    dual_matrix, trace_block, vacuum_to_one)

__all__ = ["FockVector", "ZGraded", "inplace", "vacuum", "basis_vector",
    "graded_add", "freeze_graded", "apply_basis", "apply_heisenberg",
    "apply_a_sequence", "apply_a_lambda", "apply_creators", "weight_basis",
    "pair_monomials", "pairing", "gram", "dual_matrix", "trace_block",
    "vacuum_to_one"]
