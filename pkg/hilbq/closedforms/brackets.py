"""Multiple q-zeta brackets balanced in an auxiliary z-variable."""


from __future__ import annotations

from ..base.partitions import compositions
from ..series.zqseries import ZQSeries
from ..series.series_ops import block, series_sum

from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple
from fractions import Fraction
from functools import lru_cache
from math import factorial


__all__ = ["Slot", "BracketSignature", "mzv_bracket", "signatures",
    "signed_bracket_sums"]


class Slot(NamedTuple):
    """
    One nested-sum slot contributing n^npow q^(n*qexp) / (1 - q^n)^power.

    :param power: Denominator power, also the slot's z-weight.
    :param qexp: q-exponent multiplier; None means power on the q-side and
        0 on the z-side.
    :param npow: Power of the summation variable in the numerator.
    """

    power: int
    qexp: Optional[int] = None
    npow: int = 0


class BracketSignature(NamedTuple):
    """
    A balanced bracket: sum over n_1 > ... > n_a and m_1 > ... > m_b with
    sum n_i s_i = sum m_j t_j.

    :param S: q-side slots (carry z^{n s}).
    :param T: z-side slots (carry z^{-m t}).
    """

    S: Tuple[Slot, ...]
    T: Tuple[Slot, ...]

    @classmethod
    def plain(cls, s: Sequence[int], t: Sequence[int]) -> "BracketSignature":
        return cls(tuple(Slot(p) for p in s), tuple(Slot(p) for p in t))

    @property
    def weight(self) -> int:
        return sum(x.power for x in self.S) + sum(x.power for x in self.T)

    @property
    def s_weight(self) -> int:
        return sum(x.power for x in self.S)


def _qexp(slot: Slot, qside: bool) -> int:
    if slot.qexp is not None:
        return slot.qexp
    return slot.power if qside else 0


def _decreasing(
    weights: Sequence[int], total: int, upper: Optional[int] = None
) -> Iterator[Tuple[int, ...]]:
    # strictly decreasing n_1 > n_2 > ... >= 1 with sum n_i w_i = total
    if not weights:
        if total == 0:
            yield ()
        return
    if upper is None:
        upper = total + 1
    w = weights[0]
    for n in range(min(upper - 1, total // w), 0, -1):
        for rest in _decreasing(weights[1:], total - n * w, n):
            yield (n,) + rest


def _side_sum(
    slots: Sequence[Slot], qside: bool, N: int, qmax: int,
    cache: Dict[Tuple[int, int, int], ZQSeries]
) -> List[ZQSeries]:
    terms = []
    weights = [x.power for x in slots]
    for ns in _decreasing(weights, N):
        acc: Optional[ZQSeries] = None
        for n, x in zip(ns, slots):
            key = (n, x.power, _qexp(x, qside))
            f = cache.get(key)
            if f is None:
                f = cache[key] = block(n, x.power, key[2], qmax=qmax)
            if x.npow:
                f = f * (n ** x.npow)
            acc = f if acc is None else acc * f
            if not acc: break
        if acc:
            terms.append(acc)
    return terms


def mzv_bracket(sig: BracketSignature, qmax: int) -> ZQSeries:
    """
    Coefficient of z^0 of a balanced bracket, truncated at qmax.

    The balance sum N = sum n_i s_i is bounded by qmax because either every
    q-side slot or every z-side slot carries q-weight at least its power.
    Signatures without that property raise ValueError.
    """

    zero = ZQSeries._new(qmax=qmax)
    if not sig.S or not sig.T:
        return zero
    if any(x.power < 1 for x in sig.S + sig.T):
        raise ValueError("Bracket slot powers must be >= 1.")
    s_dom = all(_qexp(x, True) >= x.power for x in sig.S)
    t_dom = all(_qexp(x, False) >= x.power for x in sig.T)
    if not (s_dom or t_dom):
        raise ValueError("Bracket has no q-weight bound; the sum diverges.")
    cache: Dict[Tuple[int, int, int], ZQSeries] = {}
    parts = []
    for N in range(1, qmax + 1):
        A = _side_sum(sig.S, True, N, qmax, cache)
        if not A: continue
        B = _side_sum(sig.T, False, N, qmax, cache)
        if not B: continue
        parts.append(series_sum(A, qmax) * series_sum(B, qmax))
    return series_sum(parts, qmax)


def signatures(weight: int) -> Iterator[BracketSignature]:
    """Plain signatures with a, b >= 1 and sum s + sum t = weight."""

    for ws in range(1, weight):
        for s in compositions(ws):
            for t in compositions(weight - ws):
                yield BracketSignature.plain(s, t)


def _sign_weight(sig: BracketSignature) -> Fraction:
    c = Fraction(1)
    for x in sig.S:
        c *= Fraction((-1) ** x.power, factorial(x.power))
    for x in sig.T:
        c /= factorial(x.power)
    return c


@lru_cache(maxsize=None)
def signed_bracket_sums(weight: int, qmax: int) -> Dict[int, ZQSeries]:
    """
    sum over weight-w signatures of prod (-1)^s/s! prod 1/t! times the
    bracket, grouped by sum s.
    """

    groups: Dict[int, List[ZQSeries]] = {}
    for sig in signatures(weight):
        br = mzv_bracket(sig, qmax)
        if br:
            groups.setdefault(sig.s_weight, []).append(br * _sign_weight(sig))
    return {p: series_sum(v, qmax) for p, v in sorted(groups.items())}
