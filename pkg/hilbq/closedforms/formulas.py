"""Closed-form generating series for traces of Chern operators."""


from __future__ import annotations

from .brackets import signed_bracket_sums
from ..base.symbols import CohClass, GenPartition
from ..base.surface import SurfaceModel
from ..base.partitions import enum_balanced, subtract
from ..series.zqseries import ZQSeries
from ..series.series_ops import block, euler_pow, series_sum

from typing import List, Union
from typing_extensions import Literal
from fractions import Fraction
from math import factorial


__all__ = ["theta", "lambda_product", "rmk914_trace", "trace_pair_closed",
    "closed_F0", "first_order_bracket", "closed_F1", "closed_Fk_point",
    "closed_ch1L", "closed_chkL"]


Route = Literal["compositions", "genpartitions"]


def _twisted_pairing(model: SurfaceModel, p: int, alpha: CohClass) -> Fraction:
    # <(1_X - K_X)^p, alpha>
    base = model.one() - model.canonical()
    return model.pair(model.power(base, p), alpha)


def lambda_product(lam: GenPartition, qmax: int) -> ZQSeries:
    """
    prod_n (-1)^m_n / (m_n! ~m_n!) q^(n m_n) / (1 - q^n)^(m_n + ~m_n), with
    m_n and ~m_n the multiplicities of the parts n and -n.
    """

    pos = dict(lam.pos)
    neg = dict(lam.neg)
    result = ZQSeries.constant(1, qmax)
    for n in sorted(set(pos) | set(neg)):
        m, mt = pos.get(n, 0), neg.get(n, 0)
        c = Fraction((-1) ** m, factorial(m) * factorial(mt))
        result = result * block(n, m + mt, m, qmax=qmax) * c
        if not result: break
    return result


def theta(
    model: SurfaceModel,
    alpha: CohClass,
    k: int,
    qmax: int,
    via: Route = "compositions"
) -> ZQSeries:
    """
    Theta^alpha_k(q), the leading trace of G_k(alpha) without the Euler
    factor.

    :param via: compositions sums weight-(k+2) brackets; genpartitions sums
        over balanced generalized partitions of length k+2.
    """

    if k < 0:
        raise ValueError(f"Theta needs k >= 0, got {k}.")
    model.check(alpha)
    if via == "compositions":
        parts = [R * _twisted_pairing(model, p, alpha)
            for p, R in signed_bracket_sums(k + 2, qmax).items()]
    elif via == "genpartitions":
        parts = []
        for lam in enum_balanced(k + 2, qmax):
            c = _twisted_pairing(model, sum(m for _, m in lam.pos), alpha)
            if c:
                parts.append(lambda_product(lam, qmax) * c)
    else:
        raise ValueError(f"Unknown theta route '{via}'.")
    return -series_sum(parts, qmax)


def rmk914_trace(
    model: SurfaceModel, lam: GenPartition, alpha: CohClass, qmax: int
) -> ZQSeries:
    """
    Tr q^d W(z) a_lambda(alpha) / lambda! in closed form: a leading product
    over the parts plus an e_X correction over matched pairs (-n, n).

    The result has one z-variable and only the z-exponent |lambda|.
    """

    model.check(alpha)
    lead = lambda_product(lam, qmax) * _twisted_pairing(
        model, sum(m for _, m in lam.pos), alpha)
    e_pair = model.pair(model.euler(), alpha)
    parts = [lead]
    if e_pair:
        neg = dict(lam.neg)
        for n, _ in lam.pos:
            if not neg.get(n): continue
            rest = subtract(lam, GenPartition.of({n: 1}, {n: 1}))
            assert rest is not None
            parts.append(block(n, 1, 1, qmax=qmax) * lambda_product(rest, qmax)
                * (-n * e_pair))
    body = series_sum(parts, qmax) * euler_pow(-model.chi, qmax)
    return ZQSeries._new(
        m={(q, (lam.size,)): v for (q, _), v in body.items()},
        qmax=body.qmax, nz=1)


def trace_pair_closed(
    model: SurfaceModel, n: int, alpha: CohClass, qmax: int
) -> ZQSeries:
    """Tr q^d (a_{-n} a_n)(alpha) without W."""

    if n < 1:
        raise ValueError(f"Mode index must be positive, got {n}.")
    e_pair = model.pair(model.euler(), model.check(alpha))
    return block(n, 1, 1, qmax=qmax) * euler_pow(-model.chi, qmax) \
        * (-n * e_pair)


def closed_F0(model: SurfaceModel, alpha: CohClass, qmax: int) -> ZQSeries:
    model.check(alpha)
    a = _twisted_pairing(model, 1, alpha)
    e = model.pair(model.euler(), alpha)
    parts: List[ZQSeries] = []
    for n in range(1, qmax + 1):
        if a: parts.append(block(n, 2, 1, qmax=qmax) * a)
        if e: parts.append(block(n, 1, 1, qmax=qmax) * (n * e))
    return series_sum(parts, qmax) * euler_pow(-model.chi, qmax)


def first_order_bracket(qmax: int) -> ZQSeries:
    """
    Coefficient of z^0 in
    sum (n-1) q^n/(1-q^n)^2 + sum (qz)^n/(1-q^n) (sum z^-2m/(1-q^m)^2
    + 2 sum_{m1 > m2} z^-m1 z^-m2/((1-q^m1)(1-q^m2))).
    """

    parts: List[ZQSeries] = []
    for n in range(2, qmax + 1):
        parts.append(block(n, 2, 1, qmax=qmax) * (n - 1))
    for m in range(1, qmax // 2 + 1):
        parts.append(block(2 * m, 1, 1, qmax=qmax) * block(m, 2, 0, qmax=qmax))
    for m1 in range(2, qmax):
        for m2 in range(1, min(m1, qmax - m1 + 1)):
            parts.append(block(m1 + m2, 1, 1, qmax=qmax)
                * block(m1, 1, 0, qmax=qmax) * block(m2, 1, 0, qmax=qmax) * 2)
    return series_sum(parts, qmax)


def closed_F1(model: SurfaceModel, alpha: CohClass, qmax: int) -> ZQSeries:
    """F^alpha_1 for e_X alpha = 0."""

    model.check(alpha)
    if not model.cup(model.euler(), alpha).is_zero():
        raise ValueError("closed_F1 needs e_X alpha = 0.")
    K = model.canonical()
    c = model.pair(K - model.cup(K, K), alpha) / 2
    if not c:
        return ZQSeries._new(qmax=qmax)
    return first_order_bracket(qmax) * euler_pow(-model.chi, qmax) * c


def closed_Fk_point(
    model: SurfaceModel, c: Union[int, Fraction], k: int, qmax: int
) -> ZQSeries:
    """F^alpha_k for alpha = c x."""

    if k < 0:
        raise ValueError(f"Chern degree must be non-negative, got {k}.")
    if not c:
        return ZQSeries._new(qmax=qmax)
    total = series_sum(list(signed_bracket_sums(k + 2, qmax).values()), qmax)
    return total * euler_pow(-model.chi, qmax) * (-Fraction(c))


def closed_ch1L(model: SurfaceModel, L: CohClass, qmax: int) -> ZQSeries:
    """Reduced <ch_1^L> of a surface with e_X = 0, from <K,L> and <K,K>."""

    K = model.canonical()
    kl = model.pair(K, model.check(L))
    kk = model.pair(K, K)
    lead = series_sum([block(n, 2, 1, qmax=qmax) for n in range(1, qmax + 1)],
        qmax)
    return lead * (-kl) + first_order_bracket(qmax) * (-kk / 2)


def closed_chkL(
    model: SurfaceModel, L: CohClass, k: int, qmax: int
) -> ZQSeries:
    """Reduced <ch_k^L> of an abelian surface, from <L,L> only."""

    if k < 0:
        raise ValueError(f"Chern degree must be non-negative, got {k}.")
    ll = model.pair(model.check(L), L)
    if not ll:
        return ZQSeries._new(qmax=qmax)
    total = series_sum(list(signed_bracket_sums(k, qmax).values()), qmax)
    return total * (-ll / 2)
