"""Ring operations on truncated series, bound to ZQSeries as dunders."""


from __future__ import annotations

from . import zqseries as zq
from .utils import coerce2, op1, op2, to_fraction, Key

from typing import Dict, Union
from fractions import Fraction
import operator


__all__ = ["add", "sub", "rsub", "mul", "neg", "div", "power"]


@coerce2
def add(a: zq.ZQSeries, b: zq.ZQSeries) -> zq.ZQSeries:
    return op2(operator.add, a, b)


@coerce2
def sub(a: zq.ZQSeries, b: zq.ZQSeries) -> zq.ZQSeries:
    return op2(operator.sub, a, b)


@coerce2
def rsub(a: zq.ZQSeries, b: zq.ZQSeries) -> zq.ZQSeries:
    return op2(operator.sub, b, a)


@coerce2
def mul(a: zq.ZQSeries, b: zq.ZQSeries) -> zq.ZQSeries:
    qmax = min(a.qmax, b.qmax)
    m: Dict[Key, Fraction] = {}
    bterms = sorted(b.items())
    for (qa, za), ca in a.items():
        if qa > qmax: continue
        for (qb, zb), cb in bterms:
            q = qa + qb
            if q > qmax: break
            k = (q, tuple(x + y for x, y in zip(za, zb)))
            m[k] = m.get(k, 0) + ca * cb
    return zq.ZQSeries._new(
        m={k: v for k, v in m.items() if v}, qmax=qmax, nz=a.nz)


def neg(a: zq.ZQSeries) -> zq.ZQSeries:
    return op1(operator.neg, a)


def div(a: zq.ZQSeries, c: Union[int, Fraction]) -> zq.ZQSeries:
    """Divide by a nonzero scalar. Series division is not supported."""

    if isinstance(c, zq.ZQSeries):
        return NotImplemented
    c = to_fraction(c)
    if not c:
        raise ZeroDivisionError("Series division by zero scalar.")
    return op1(lambda v: v / c, a)


def power(a: zq.ZQSeries, e: int) -> zq.ZQSeries:
    if not isinstance(e, int) or e < 0:
        raise ValueError("Series powers must be non-negative integers.")
    result = zq.ZQSeries.constant(1, a.qmax, a.nz)
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result
