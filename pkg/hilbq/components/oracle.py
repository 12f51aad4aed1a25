"""Brute-force graded traces: the reference side of every identity."""


from __future__ import annotations

from .chern import ChernOp, chern_op, apply_G
from .vertex import apply_W, w_matrix_element
from ..base.symbols import CohClass, GenPartition, Monomial
from ..base.surface import SurfaceModel
from ..config import Settings
from ..fock.fockvector import FockVector, ZGraded, basis_vector
from ..fock.heisenberg import apply_a_lambda
from ..fock.pairing import trace_block
from ..series.zqseries import ZQSeries
from ..series.series_ops import euler_pow, coe_z0, series_sum

from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
import logging


__all__ = ["TraceOperator", "oracle_trace", "oracle_F",
    "oracle_trace_product", "ch_terms", "series_ch"]


Inner = Callable[[FockVector], FockVector]


class TraceOperator:
    """
    An operator [W(z) o] inner, exposing the diagonal entries used by the
    coordinate trace.

    :param model: Surface model.
    :param inner: Operator applied before W.
    :param with_w: Whether W(z) is composed on the left.
    """

    def __init__(self, model: SurfaceModel, inner: Inner, with_w: bool) -> None:
        self.model = model
        self.inner = inner
        self.with_w = with_w

    @property
    def nz(self) -> int:
        return 1 if self.with_w else 0

    def __call__(self, v: FockVector) -> Union[FockVector, ZGraded]:
        image = self.inner(v)
        if not self.with_w:
            return image
        top = max(v.weights(), default=0)
        return apply_W(self.model, image, max_weight=top)

    def diagonal(self, u: Monomial) -> Dict[Tuple[int, ...], Fraction]:
        image = self.inner(basis_vector(u))
        if not self.with_w:
            return {(): image[u]}
        out: Dict[Tuple[int, ...], Fraction] = {}
        for t, c in image.items():
            entry = w_matrix_element(self.model, u, t)
            if entry is None: continue
            z, w = entry
            out[(z,)] = out.get((z,), 0) + c * w
        return out


def oracle_trace(
    model: SurfaceModel,
    op: TraceOperator,
    qmax: int,
    settings: Optional[Settings] = None,
    via: str = "coordinates"
) -> ZQSeries:
    """Sum over n <= qmax of q^n times the weight-n trace of op."""

    settings = settings or Settings.from_env()

    def block(n: int) -> ZQSeries:
        return trace_block(model, op, n, nz=op.nz, qmax=qmax, via=via)

    if settings.threads > 1:
        with ThreadPoolExecutor(max_workers=settings.threads) as pool:
            blocks = list(pool.map(block, range(qmax + 1)))
    else:
        blocks = [block(n) for n in range(qmax + 1)]
    return series_sum(blocks, qmax, op.nz)


def _compose(ops: Sequence[Inner]) -> Inner:
    def inner(v: FockVector) -> FockVector:
        for f in reversed(ops):
            v = f(v)
            if not v: break
        return v
    return inner


def oracle_F(
    model: SurfaceModel,
    ks: Sequence[int],
    alphas: Sequence[CohClass],
    qmax: int,
    modes: Optional[Sequence[Optional[str]]] = None,
    settings: Optional[Settings] = None
) -> ZQSeries:
    """
    Tr q^d W(z) prod_i G_{k_i}(alpha_i) to order qmax, as a z-series.

    Raises AdmissibilityError for any (k_i, alpha_i) outside the
    determined regime.
    """

    if len(ks) != len(alphas):
        raise ValueError("Need one class per Chern degree.")
    modes = list(modes) if modes is not None else [None] * len(ks)
    ops: List[ChernOp] = [chern_op(model, k, a, m)  # type: ignore
        for k, a, m in zip(ks, alphas, modes)]
    logging.debug(f"oracle_F ks={list(ks)} on {model.name} to q^{qmax}.")
    inner = _compose([lambda v, op=op: apply_G(model, op, v) for op in ops])
    return oracle_trace(model, TraceOperator(model, inner, True), qmax,
        settings)


def oracle_trace_product(
    model: SurfaceModel,
    lams: Sequence[GenPartition],
    alphas: Sequence[CohClass],
    with_w: bool,
    qmax: int,
    settings: Optional[Settings] = None
) -> ZQSeries:
    """
    Tr q^d [W(z)] prod_i a_{lambda_i}(alpha_i) / lambda_i! to order qmax.

    The result has one z-variable with W and none without.
    """

    if len(lams) != len(alphas):
        raise ValueError("Need one class per partition.")

    def factor(lam: GenPartition, alpha: CohClass) -> Inner:
        scale = Fraction(1, lam.factorial)
        return lambda v: apply_a_lambda(model, lam, alpha, v) * scale

    inner = _compose([factor(l, a) for l, a in zip(lams, alphas)])
    return oracle_trace(model, TraceOperator(model, inner, with_w), qmax,
        settings)


def ch_terms(
    model: SurfaceModel, L: CohClass, k: int
) -> List[Tuple[int, CohClass, Fraction]]:
    """
    Summands (k', alpha, c) of ch_k(L^[n]) = G_k(1_X) + G_{k-1}(L) +
    G_{k-2}(L^2)/2, dropping negative degrees and zero classes.
    """

    terms = [(k, model.one(), Fraction(1)),
        (k - 1, L, Fraction(1)),
        (k - 2, model.cup(L, L), Fraction(1, 2))]
    return [(kk, a, c) for kk, a, c in terms if kk >= 0 and not a.is_zero()]


def series_ch(
    model: SurfaceModel,
    Ls: Sequence[Union[str, CohClass]],
    ks: Sequence[int],
    reduced: bool,
    qmax: int,
    settings: Optional[Settings] = None
) -> ZQSeries:
    """
    <ch_{k_1}^{L_1} ... ch_{k_N}^{L_N}> by multilinear expansion into
    oracle_F calls; reduced multiplies by (q;q)^chi.
    """

    if len(Ls) != len(ks):
        raise ValueError("Need one line bundle per Chern degree.")
    classes = [model.line(L) if isinstance(L, str) else model.check(L)
        for L in Ls]
    expansions = [ch_terms(model, L, k) for L, k in zip(classes, ks)]
    choices: List[Tuple[List[int], List[CohClass], Fraction]] = [
        ([], [], Fraction(1))]
    for terms in expansions:
        choices = [(kk + [k], aa + [a], c * ci)
            for kk, aa, c in choices for k, a, ci in terms]
    for terms in expansions:
        for k, a, _ in terms:
            chern_op(model, k, a)
    parts = []
    for kk, aa, c in choices:
        parts.append(coe_z0(oracle_F(model, kk, aa, qmax, settings=settings)) * c)
    total = series_sum(parts, qmax)
    if reduced:
        total = total * euler_pow(model.chi, qmax)
    return total
