from __future__ import annotations

__all__ = ["ZQSeries"]

from . import basic_ops as bops
from .utils import to_fraction

from typing import (Any, Dict, Iterable, Iterator, List, Mapping, Optional,
    Sequence, Tuple, Union)
from fractions import Fraction


Key = Tuple[int, Tuple[int, ...]]


class ZQSeries(Mapping[Key, Fraction]):
    """
    A truncated formal series in q with Laurent monomials in z-variables.

    Maps keys (qExp, zExps) to exact rational coefficients. Terms with
    qExp > qmax are dropped on construction and after every product; zero
    coefficients are never stored. The number of z-variables, nz, is fixed
    per series and checked whenever two series meet.

    Instances are immutable.

    :param m: Term-coefficient associations. Coefficients may be ints,
        Fractions or "p/q" strings.
    :param qmax: Truncation order in q.
    :param nz: Number of z-variables.
    """

    __slots__ = ("_m", "_qmax", "_nz")

    _m: Dict[Key, Fraction]
    _qmax: int
    _nz: int

    def __init__(
        self,
        m: Optional[Mapping[Key, Any]] = None,
        qmax: int = 0,
        nz: int = 0
    ) -> None:
        if qmax < 0:
            raise ValueError("Truncation order must be non-negative.")
        if nz < 0:
            raise ValueError("Number of z-variables must be non-negative.")
        self._qmax = qmax
        self._nz = nz
        self._m = {}
        for (q, zs), c in (m or {}).items():
            zs = tuple(zs)
            if q < 0:
                raise ValueError(f"Negative q-exponent {q} in series term.")
            if len(zs) != nz:
                raise ValueError(
                    f"Term {(q, zs)} does not match {nz} z-variables.")
            if q > qmax: continue
            v = to_fraction(c)
            if v:
                key = (q, zs)
                v = self._m.get(key, 0) + v
                if v: self._m[key] = v
                else: del self._m[key]

    @classmethod
    def _new(
        cls,
        m: Optional[Dict[Key, Fraction]] = None,
        qmax: int = 0,
        nz: int = 0
    ) -> "ZQSeries":
        # Fast instance constructor (omits checks); for use in op defs
        new = cls.__new__(cls)
        new._m = m if m is not None else {}
        new._qmax = qmax
        new._nz = nz
        return new

    @classmethod
    def constant(
        cls, c: Union[int, Fraction], qmax: int, nz: int = 0
    ) -> "ZQSeries":
        return cls({(0, (0,) * nz): c}, qmax=qmax, nz=nz)

    @classmethod
    def monomial(
        cls,
        c: Union[int, Fraction],
        qexp: int,
        zexps: Sequence[int] = (),
        qmax: int = 0
    ) -> "ZQSeries":
        zexps = tuple(zexps)
        return cls({(qexp, zexps): c}, qmax=qmax, nz=len(zexps))

    @classmethod
    def from_coeffs(
        cls, coeffs: Iterable[Union[int, Fraction]], qmax: int
    ) -> "ZQSeries":
        """Build a z-free series from its q-coefficients, lowest first."""

        return cls({(n, ()): c for n, c in enumerate(coeffs)}, qmax=qmax)

    @property
    def qmax(self) -> int:
        """Truncation order in q."""
        return self._qmax

    @property
    def nz(self) -> int:
        """Number of z-variables."""
        return self._nz

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, ZQSeries):
            return (self._m == other._m and self._nz == other._nz
                and self._qmax == other._qmax)
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((frozenset(self._m.items()), self._qmax, self._nz))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._m!r}, qmax={self._qmax}, " \
            f"nz={self._nz})"

    def __str__(self) -> str:
        from ..utils.pprint import format_series
        return format_series(self)

    def __len__(self) -> int:
        return len(self._m)

    def __iter__(self) -> Iterator[Key]:
        yield from iter(self._m)

    def __contains__(self, key: Any) -> bool:
        return key in self._m

    def __getitem__(self, key: Key) -> Fraction:
        return self._m.get(key, Fraction(0))

    def coefficient(self, qexp: int, zexps: Sequence[int] = ()) -> Fraction:
        return self[(qexp, tuple(zexps))]

    def coefficients(self) -> List[Fraction]:
        """Dense q-coefficient list 0..qmax of a z-free series."""

        if self._nz:
            raise ValueError("Dense coefficients need a z-free series.")
        return [self[(n, ())] for n in range(self._qmax + 1)]

    def terms(self) -> List[Tuple[Key, Fraction]]:
        """Terms sorted by qExp, then lexicographically by zExps."""
        return sorted(self._m.items())

    def truncate(self, qmax: int) -> "ZQSeries":
        qmax = min(qmax, self._qmax)
        return ZQSeries._new(
            m={k: v for k, v in self._m.items() if k[0] <= qmax},
            qmax=qmax, nz=self._nz)

    def is_z_free(self) -> bool:
        """True iff every stored term has all z-exponents equal to 0."""
        return all(not any(zs) for _, zs in self._m)

    def first_difference(
        self, other: "ZQSeries"
    ) -> Optional[Tuple[Key, Fraction, Fraction]]:
        """Lowest key where self and other disagree, with both values."""

        for k in sorted(set(self._m) | set(other._m)):
            if self[k] != other[k]:
                return k, self[k], other[k]
        return None

    ### Arithmetic Dunder Methods ###

    __add__ = bops.add
    __radd__ = bops.add
    __sub__ = bops.sub
    __rsub__ = bops.rsub
    __mul__ = bops.mul
    __rmul__ = bops.mul
    __neg__ = bops.neg
    __truediv__ = bops.div
    __pow__ = bops.power
