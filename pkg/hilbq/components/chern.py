"""Chern character operators G_k(alpha) in Heisenberg form."""


from __future__ import annotations

from ..base.symbols import CohClass, GenPartition
from ..base.surface import SurfaceModel
from ..base.partitions import enum_balanced
from ..fock.fockvector import FockVector
from ..fock.heisenberg import apply_a_lambda

from typing import List, NamedTuple, Optional, Tuple
from typing_extensions import Literal
from fractions import Fraction
from functools import lru_cache
import logging


__all__ = ["AdmissibilityError", "ChernOp", "chern_op", "apply_G",
    "chern_terms"]


Mode = Literal["full", "leading", "euler"]


class AdmissibilityError(RuntimeError):
    pass


class ChernOp(NamedTuple):
    """
    Cup product with G_k(alpha) on every H*(X^[n]).

    :param k: Chern character degree.
    :param alpha: Class the operator is attached to.
    :param mode: full (k <= 1), leading (K alpha = e_X alpha = 0) or euler
        (K alpha = 0, adds the e_X alpha term).
    """

    k: int
    alpha: CohClass
    mode: Mode


def _reject(k: int, alpha: CohClass, why: str) -> AdmissibilityError:
    return AdmissibilityError(
        f"G_{k}(alpha) with alpha={tuple(map(str, alpha.coords))} is not "
        f"determined: {why}; it involves the unknown constants g_1,lambda "
        f"and g_2,lambda.")


def chern_op(
    model: SurfaceModel, k: int, alpha: CohClass, mode: Optional[Mode] = None
) -> ChernOp:
    """
    Validate (k, alpha) and pick the operator mode.

    Without an explicit mode: full for k <= 1, leading when K alpha and
    e_X alpha vanish, euler when only K alpha vanishes.
    """

    if k < 0:
        raise ValueError(f"Chern degree must be non-negative, got {k}.")
    model.check(alpha)
    if k <= 1:
        if mode not in (None, "full"):
            raise ValueError(f"Mode {mode} is not used for k={k}.")
        return ChernOp(k, alpha, "full")
    k_alpha = model.cup(model.canonical(), alpha)
    e_alpha = model.cup(model.euler(), alpha)
    if not k_alpha.is_zero():
        raise _reject(k, alpha, "K_X alpha != 0")
    if mode is None:
        mode = "leading" if e_alpha.is_zero() else "euler"
    if mode == "leading" and not e_alpha.is_zero():
        raise _reject(k, alpha, "e_X alpha != 0 in leading mode")
    if mode not in ("leading", "euler"):
        raise ValueError(f"Unknown mode {mode} for k={k}.")
    return ChernOp(k, alpha, mode)


@lru_cache(maxsize=None)
def _terms(
    model: SurfaceModel, k: int, alpha: CohClass, mode: str, weight: int
) -> Tuple[Tuple[Fraction, GenPartition, CohClass], ...]:
    terms: List[Tuple[Fraction, GenPartition, CohClass]] = []
    if weight < 1:
        return ()
    for lam in enum_balanced(k + 2, weight):
        terms.append((Fraction(-1, lam.factorial), lam, alpha))
    if k == 1:
        ka = model.cup(model.canonical(), alpha)
        if not ka.is_zero():
            for n in range(2, weight + 1):
                lam = GenPartition.of({n: 1}, {n: 1})
                terms.append((Fraction(-(n - 1), 2), lam, ka))
    if mode == "euler":
        ea = model.cup(model.euler(), alpha)
        for lam in enum_balanced(k, weight):
            terms.append(
                (Fraction(lam.norm2 - 2, 24 * lam.factorial), lam, ea))
    return tuple(terms)


def chern_terms(
    model: SurfaceModel, op: ChernOp, weight: int
) -> Tuple[Tuple[Fraction, GenPartition, CohClass], ...]:
    """(coefficient, lambda, class) terms of op acting on weight <= weight."""
    return _terms(model, op.k, op.alpha, op.mode, weight)


def apply_G(model: SurfaceModel, op: ChernOp, v: FockVector) -> FockVector:
    """Apply G_k(alpha); weight-preserving."""

    out = FockVector._new(prot=False)
    for w in v.weights():
        part = v.component(w)
        for c, lam, cls in chern_terms(model, op, w):
            out.accumulate_from(apply_a_lambda(model, lam, cls, part), c)
    logging.debug(f"Applied G_{op.k} ({op.mode}) to {len(v)} monomials.")
    return out.protect()
