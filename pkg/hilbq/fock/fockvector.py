from __future__ import annotations

__all__ = ["FockVector", "ZGraded", "inplace", "vacuum", "basis_vector",
    "graded_add", "freeze_graded"]

from ..base.symbols import Monomial
from ..series.utils import to_fraction

from typing import (Any, Callable, Dict, Iterable, Iterator, Mapping,
    Optional, Tuple, TypeVar, Union)
from typing_extensions import Concatenate, ParamSpec
from fractions import Fraction
from functools import wraps


P = ParamSpec("P")
R = TypeVar("R")


def inplace(
    f: Callable[Concatenate["FockVector", P], R]
) -> Callable[Concatenate["FockVector", P], R]:

    @wraps(f)
    def wrapper(v: "FockVector", *args: P.args, **kwargs: P.kwargs) -> R:
        if v.prot: raise RuntimeError("Cannot mutate protected FockVector data.")
        return f(v, *args, **kwargs)

    return wrapper


class FockVector(Mapping[Monomial, Fraction]):
    """
    A finite rational combination of creation monomials.

    Keys are canonical monomials: sorted tuples of (n, b) pairs standing
    for prod a_{-n}(b_b)|0>, with b indexing the surface basis. The
    vacuum is the empty monomial. Zero coefficients are never stored.

    Vectors returned by operators are protected; accumulation into an
    unprotected vector goes through the inplace methods.

    :param m: Monomial-coefficient associations.
    :param prot: When True, in-place operations are disabled.
    """

    __slots__ = ("_m", "_prot")

    _m: Dict[Monomial, Fraction]
    _prot: bool

    def __init__(
        self,
        m: Optional[Mapping[Monomial, Any]] = None,
        prot: bool = False
    ) -> None:
        self._m = {}
        for k, c in (m or {}).items():
            key = tuple(sorted((int(n), int(b)) for n, b in k))
            if any(n < 1 for n, _ in key):
                raise ValueError(f"Creation modes must be positive: {k}.")
            v = self._m.get(key, 0) + to_fraction(c)
            if v: self._m[key] = v
            else: self._m.pop(key, None)
        self._prot = prot

    @classmethod
    def _new(
        cls, m: Optional[Dict[Monomial, Fraction]] = None, prot: bool = True
    ) -> "FockVector":
        # Fast instance constructor (omits checks); for use in op defs
        new = cls.__new__(cls)
        new._m = m if m is not None else {}
        new._prot = prot
        return new

    @property
    def prot(self) -> bool:
        """Bool indicating whether self is protected."""
        return self._prot

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, FockVector):
            return self._m == other._m
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._m.items()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._m!r})"

    def __str__(self) -> str:
        from ..utils.pprint import format_vector
        return format_vector(self)

    def __len__(self) -> int:
        return len(self._m)

    def __iter__(self) -> Iterator[Monomial]:
        yield from iter(self._m)

    def __contains__(self, key: Any) -> bool:
        return key in self._m

    def __getitem__(self, key: Monomial) -> Fraction:
        return self._m.get(key, Fraction(0))

    def weights(self) -> Tuple[int, ...]:
        """Sorted weights present in self."""
        return tuple(sorted({sum(n for n, _ in k) for k in self._m}))

    def component(self, weight: int) -> "FockVector":
        return FockVector._new({k: v for k, v in self._m.items()
            if sum(n for n, _ in k) == weight})

    def copy(self) -> "FockVector":
        """Unprotected copy for accumulation."""
        return FockVector._new(dict(self._m), prot=False)

    ### In-place Accumulation ###

    @inplace
    def accumulate(self, key: Monomial, c: Fraction) -> None:
        v = self._m.get(key, 0) + c
        if v: self._m[key] = v
        else: self._m.pop(key, None)

    @inplace
    def accumulate_from(self, other: "FockVector", c: Fraction = 1) -> None:
        for k, v in other._m.items():
            self.accumulate(k, c * v)

    def protect(self) -> "FockVector":
        self._prot = True
        return self

    ### Linear Structure ###

    def __add__(self, other: "FockVector") -> "FockVector":
        if not isinstance(other, FockVector):
            return NotImplemented
        out = self.copy()
        out.accumulate_from(other)
        return out.protect()

    def __sub__(self, other: "FockVector") -> "FockVector":
        if not isinstance(other, FockVector):
            return NotImplemented
        out = self.copy()
        out.accumulate_from(other, Fraction(-1))
        return out.protect()

    def __neg__(self) -> "FockVector":
        return FockVector._new({k: -v for k, v in self._m.items()})

    def __mul__(self, c: Union[int, Fraction]) -> "FockVector":
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        if not c:
            return FockVector._new()
        return FockVector._new({k: c * v for k, v in self._m.items()})

    __rmul__ = __mul__


ZGraded = Dict[Tuple[int, ...], FockVector]


def vacuum() -> FockVector:
    return FockVector._new({(): Fraction(1)})


def basis_vector(key: Iterable[Tuple[int, int]], c: Any = 1) -> FockVector:
    return FockVector({tuple(key): c}, prot=True)


def graded_add(
    acc: Dict[Tuple[int, ...], FockVector],
    zexps: Tuple[int, ...],
    v: FockVector,
    c: Fraction = Fraction(1)
) -> None:
    """Accumulate c * v into the z^zexps component of acc."""

    if not v: return
    slot = acc.get(zexps)
    if slot is None:
        slot = acc[zexps] = FockVector._new(prot=False)
    slot.accumulate_from(v, c)


def freeze_graded(acc: Dict[Tuple[int, ...], FockVector]) -> ZGraded:
    """Protect every component and drop empty ones."""
    return {k: v.protect() for k, v in sorted(acc.items()) if v}
