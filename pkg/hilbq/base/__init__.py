"""Surface models, cohomology classes and partition combinatorics."""

from .symbols import Monomial, monomial, CohClass, GenPartition
from .linalg import SingularMatrixError
from .surface import ModelError, SurfaceModel, PRESETS, preset
from .partitions import (divisor_sigma, partitions, compositions, stats,
    enum_balanced, subtract, colored_monomials)

__all__ = ["Monomial", "monomial", "CohClass", "GenPartition",
    "SingularMatrixError", "ModelError", "SurfaceModel", "PRESETS", "preset",
    "divisor_sigma", "partitions", "compositions", "stats", "enum_balanced",
    "subtract", "colored_monomials"]
