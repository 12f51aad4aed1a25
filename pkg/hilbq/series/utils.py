from __future__ import annotations

from . import zqseries as zq

from typing import Callable, Dict, Tuple, Union, Any
from fractions import Fraction


Key = Tuple[int, Tuple[int, ...]]
SeriesLike = Union["zq.ZQSeries", Fraction, int]


class ArityError(ValueError):
    """Raised when series with different numbers of z-variables meet."""
    pass


def to_fraction(x: Any) -> Fraction:
    """
    Coerce x to an exact Fraction.

    Accepts ints, Fractions and decimal-free strings of the form "p" or
    "p/q". Floats are rejected; all arithmetic in hilbq is exact.
    """

    if isinstance(x, bool):
        raise TypeError("Booleans are not valid coefficients.")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if "." in s or "e" in s.lower():
            raise ValueError(f"Expected an exact fraction, got '{x}'.")
        return Fraction(s)
    raise TypeError(f"Cannot interpret {type(x).__name__} as exact rational.")


def format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def coerce2(
    f: Callable[[zq.ZQSeries, zq.ZQSeries], zq.ZQSeries]
) -> Callable[[zq.ZQSeries, SeriesLike], zq.ZQSeries]:

    def wrapper(a: zq.ZQSeries, b: SeriesLike) -> zq.ZQSeries:
        if isinstance(b, (int, Fraction)) and not isinstance(b, bool):
            b = zq.ZQSeries.constant(b, a.qmax, a.nz)
        if not isinstance(b, zq.ZQSeries):
            return NotImplemented
        check_arity(a, b)
        return f(a, b)

    wrapper.__name__ = f.__name__
    wrapper.__qualname__ = f.__qualname__

    return wrapper


def check_arity(a: zq.ZQSeries, b: zq.ZQSeries) -> None:
    if a.nz != b.nz:
        raise ArityError(
            f"Series arity mismatch: {a.nz} vs {b.nz} z-variables.")


def op1(f: Callable[[Fraction], Fraction], a: zq.ZQSeries) -> zq.ZQSeries:
    m = {k: f(v) for k, v in a.items()}
    return zq.ZQSeries._new(m={k: v for k, v in m.items() if v},
        qmax=a.qmax, nz=a.nz)


def op2(
    f: Callable[[Fraction, Fraction], Fraction],
    a: zq.ZQSeries,
    b: zq.ZQSeries
) -> zq.ZQSeries:
    qmax = min(a.qmax, b.qmax)
    zero = Fraction(0)
    m: Dict[Key, Fraction] = {}
    for k in set(a) | set(b):
        if k[0] > qmax: continue
        v = f(a._m.get(k, zero), b._m.get(k, zero))
        if v: m[k] = v
    return zq.ZQSeries._new(m=m, qmax=qmax, nz=a.nz)
