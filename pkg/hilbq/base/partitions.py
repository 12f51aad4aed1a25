"""Partition combinatorics: generalized partitions and colored bases."""


from __future__ import annotations

from .symbols import GenPartition, Monomial

from typing import Dict, Iterator, List, Optional, Tuple
from functools import lru_cache


__all__ = ["divisor_sigma", "partitions", "compositions", "stats",
    "enum_balanced", "subtract", "colored_monomials"]


@lru_cache(maxsize=None)
def divisor_sigma(n: int) -> int:
    """Sum of the positive divisors of n."""

    if n < 1:
        raise ValueError("divisor_sigma needs a positive integer.")
    return sum(d for d in range(1, n + 1) if n % d == 0)


def partitions(
    n: int, k: Optional[int] = None, max_part: Optional[int] = None
) -> Iterator[Tuple[int, ...]]:
    """
    Yield partitions of n as nonincreasing tuples.

    :param n: Integer to partition.
    :param k: If given, only partitions with exactly k parts.
    :param max_part: Upper bound on parts.
    """

    if max_part is None:
        max_part = n
    if n == 0:
        if k is None or k == 0:
            yield ()
        return
    if k is not None and (k <= 0 or k * max_part < n):
        return
    for first in range(min(n, max_part), 0, -1):
        rest_k = None if k is None else k - 1
        for rest in partitions(n - first, rest_k, first):
            yield (first,) + rest


def compositions(n: int) -> Iterator[Tuple[int, ...]]:
    """Yield ordered compositions of n into positive parts."""

    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def stats(lam: GenPartition) -> Tuple[int, int, int, int]:
    """Return (length, signed size, squared norm, factorial) of lam."""
    return lam.length, lam.size, lam.norm2, lam.factorial


def _mults(parts: Tuple[int, ...]) -> Dict[int, int]:
    d: Dict[int, int] = {}
    for p in parts:
        d[p] = d.get(p, 0) + 1
    return d


@lru_cache(maxsize=None)
def _balanced(length: int, max_pos_weight: int) -> Tuple[GenPartition, ...]:
    found = []
    for w in range(1, max_pos_weight + 1):
        for k in range(1, length):
            for pos in partitions(w, k):
                for neg in partitions(w, length - k):
                    lam = GenPartition.of(_mults(neg), _mults(pos))
                    found.append(((w, k, lam.parts()), lam))
    found.sort(key=lambda item: item[0])
    return tuple(lam for _, lam in found)


def enum_balanced(length: int, max_pos_weight: int) -> List[GenPartition]:
    """
    All generalized partitions of the given length with |lambda| = 0 and
    positive weight at most max_pos_weight.

    Ordered by positive weight, then number of positive parts, then
    signed parts ascending.
    """

    if length < 2:
        raise ValueError("Balanced partitions need length >= 2.")
    if max_pos_weight < 1:
        return []
    return list(_balanced(length, max_pos_weight))


def subtract(lam: GenPartition, mu: GenPartition) -> Optional[GenPartition]:
    """
    Multiplicity-wise difference lam - mu.

    Returns None (the empty marker) if a multiplicity would go negative.
    """

    neg = dict(lam.neg)
    pos = dict(lam.pos)
    for src, dst in ((mu.neg, neg), (mu.pos, pos)):
        for n, m in src:
            left = dst.get(n, 0) - m
            if left < 0:
                return None
            dst[n] = left
    return GenPartition.of(neg, pos)


@lru_cache(maxsize=None)
def colored_monomials(n: int, colors: int) -> Tuple[Monomial, ...]:
    """
    Canonical creation monomials of weight n over the given number of
    basis colors, as sorted tuples of (part, color).
    """

    items = [(p, c) for p in range(1, n + 1) for c in range(colors)]
    out: List[Monomial] = []

    def rec(start: int, remaining: int, acc: List[Tuple[int, int]]) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        for idx in range(start, len(items)):
            p, _ = items[idx]
            if p > remaining: break
            acc.append(items[idx])
            rec(idx, remaining - p, acc)
            acc.pop()

    rec(0, n, [])
    return tuple(out)
