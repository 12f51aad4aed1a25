"""Named series constructors and coefficient transforms."""


from __future__ import annotations

from .zqseries import ZQSeries
from .utils import check_arity, Key

from typing import Dict, List, Optional, Sequence
from fractions import Fraction
from functools import lru_cache
from math import comb


__all__ = ["euler_pow", "block", "coe_z0", "q_ddq", "sigma1_series",
    "embed", "series_sum"]


def _gen_binomial(c: int, k: int) -> int:
    # binom(c, k) for any integer c
    num = 1
    for i in range(k):
        num *= c - i
    den = 1
    for i in range(2, k + 1):
        den *= i
    return num // den


@lru_cache(maxsize=None)
def _euler_coeffs(c: int, qmax: int) -> tuple:
    coeffs: List[int] = [0] * (qmax + 1)
    coeffs[0] = 1
    for m in range(1, qmax + 1):
        # (1 - q^m)^c = sum_k binom(c, k) (-1)^k q^(mk)
        factor = [(k * m, _gen_binomial(c, k) * (-1) ** k)
            for k in range(1, qmax // m + 1)]
        factor = [(e, v) for e, v in factor if v]
        if not factor: continue
        new = coeffs[:]
        for n in range(qmax + 1):
            if not coeffs[n]: continue
            for e, v in factor:
                if n + e > qmax: break
                new[n + e] += coeffs[n] * v
        coeffs = new
    return tuple(coeffs)


def euler_pow(c: int, qmax: int) -> ZQSeries:
    """Return (q;q)_inf^c = prod_{m >= 1} (1 - q^m)^c truncated at qmax."""

    coeffs = _euler_coeffs(c, qmax)
    return ZQSeries._new(
        m={(n, ()): Fraction(v) for n, v in enumerate(coeffs) if v},
        qmax=qmax)


def block(
    n: int,
    w: int,
    a: int,
    zstep: int = 0,
    qmax: int = 0,
    nz: Optional[int] = None,
    slot: int = 0
) -> ZQSeries:
    """
    Return q^(n*a) z^(n*zstep) / (1 - q^n)^w expanded to qmax.

    :param n: Positive base part.
    :param w: Denominator power, w >= 0.
    :param a: Multiplier of the q-exponent of the numerator.
    :param zstep: Multiplier of the z-exponent of the numerator.
    :param qmax: Truncation order.
    :param nz: Number of z-variables; defaults to 1 if zstep else 0.
    :param slot: z-variable carrying the z-power.
    """

    if n < 1:
        raise ValueError(f"Block part must be positive, got {n}.")
    if w < 0 or a < 0:
        raise ValueError("Block exponents must be non-negative.")
    if nz is None:
        nz = 1 if zstep else 0
    if zstep and not 0 <= slot < nz:
        raise ValueError(f"z-slot {slot} out of range for {nz} variables.")
    zs = [0] * nz
    if nz: zs[slot] = n * zstep
    zexps = tuple(zs)
    m: Dict[Key, Fraction] = {}
    j = 0
    while n * (a + j) <= qmax:
        # 1/(1-x)^w = sum_j binom(j+w-1, w-1) x^j
        v = comb(j + w - 1, w - 1) if w else int(j == 0)
        if v: m[(n * (a + j), zexps)] = Fraction(v)
        if not w: break
        j += 1
    return ZQSeries._new(m=m, qmax=qmax, nz=nz)


def coe_z0(a: ZQSeries) -> ZQSeries:
    """Keep terms whose z-exponents are all 0; result is z-free."""

    return ZQSeries._new(
        m={(q, ()): v for (q, zs), v in a.items() if not any(zs)},
        qmax=a.qmax)


def q_ddq(a: ZQSeries) -> ZQSeries:
    return ZQSeries._new(
        m={k: k[0] * v for k, v in a.items() if k[0]},
        qmax=a.qmax, nz=a.nz)


def sigma1_series(qmax: int, start: int = 1) -> ZQSeries:
    """Return sum_{N >= start} sigma_1(N) q^N."""

    from ..base.partitions import divisor_sigma

    return ZQSeries._new(
        m={(N, ()): Fraction(divisor_sigma(N))
            for N in range(max(start, 1), qmax + 1)},
        qmax=qmax)


def embed(
    a: ZQSeries, nz: int, slots: Optional[Sequence[int]] = None
) -> ZQSeries:
    """Move the z-variables of a into positions slots of an nz-arity series."""

    if slots is None:
        slots = range(a.nz)
    slots = tuple(slots)
    if len(slots) != a.nz:
        raise ValueError("Need one target slot per z-variable.")
    m: Dict[Key, Fraction] = {}
    for (q, zs), v in a.items():
        new = [0] * nz
        for s, e in zip(slots, zs):
            new[s] = e
        m[(q, tuple(new))] = v
    return ZQSeries._new(m=m, qmax=a.qmax, nz=nz)


def series_sum(
    terms: Sequence[ZQSeries], qmax: int, nz: int = 0
) -> ZQSeries:
    """Sum many series in one pass."""

    m: Dict[Key, Fraction] = {}
    for t in terms:
        if t.nz != nz:
            check_arity(ZQSeries._new(qmax=qmax, nz=nz), t)
        qmax = min(qmax, t.qmax)
        for k, v in t.items():
            m[k] = m.get(k, 0) + v
    return ZQSeries._new(
        m={k: v for k, v in m.items() if v and k[0] <= qmax},
        qmax=qmax, nz=nz)
