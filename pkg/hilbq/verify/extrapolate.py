"""Per-coefficient polynomial extrapolation of series families in chi."""


from __future__ import annotations

from ..series.zqseries import ZQSeries
from ..base.linalg import lagrange_eval

from typing import Callable, Dict, Optional, Sequence, Tuple
from fractions import Fraction
import logging


__all__ = ["InsufficientSamplesError", "chi_extrapolate", "qexp_bound"]


class InsufficientSamplesError(RuntimeError):
    pass


def qexp_bound(qexp: int) -> int:
    """Default chi-degree bound of the q^qexp coefficient."""
    return qexp


def chi_extrapolate(
    family: Sequence[Tuple[int, ZQSeries]],
    target: int = 0,
    degree_bound: Optional[Callable[[int], int]] = None
) -> ZQSeries:
    """
    Interpolate each coefficient of a chi-indexed family and evaluate it at
    chi = target.

    The q^n coefficient is taken to be a polynomial in chi of degree at most
    degree_bound(n); it is fitted through degree_bound(n) + 1 samples and
    the remaining samples are checked against the fit.

    :param family: (chi, series) pairs with distinct chi and equal arity.
    :param target: Evaluation point.
    :param degree_bound: Degree bound per q-exponent; defaults to qexp.
    """

    bound = degree_bound or qexp_bound
    if not family:
        raise InsufficientSamplesError("Cannot extrapolate an empty family.")
    chis = [c for c, _ in family]
    if len(set(chis)) != len(chis):
        raise ValueError("Family samples need distinct chi values.")
    nz = family[0][1].nz
    if any(s.nz != nz for _, s in family):
        raise ValueError("Family series must share their z-arity.")
    qmax = min(s.qmax for _, s in family)
    ordered = sorted(family, key=lambda item: item[0])
    keys = sorted({k for _, s in ordered for k in s if k[0] <= qmax})
    m: Dict[Tuple[int, Tuple[int, ...]], Fraction] = {}
    for key in keys:
        need = bound(key[0]) + 1
        if len(ordered) < need:
            raise InsufficientSamplesError(
                f"q^{key[0]} needs {need} chi samples, got {len(ordered)}.")
        xs = [c for c, _ in ordered[:need]]
        ys = [s[key] for _, s in ordered[:need]]
        for c, s in ordered[need:]:
            if lagrange_eval(xs, ys, c) != s[key]:
                raise InsufficientSamplesError(
                    f"Coefficient at {key} exceeds chi-degree {need - 1}.")
        v = lagrange_eval(xs, ys, target)
        if v: m[key] = v
    logging.debug(f"Extrapolated {len(keys)} coefficients from "
        f"{len(ordered)} samples to chi={target}.")
    return ZQSeries._new(m=m, qmax=qmax, nz=nz)
