"""Basic hilbq datatypes."""


from __future__ import annotations
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Tuple, Union
from fractions import Fraction
from math import factorial


__all__ = ["Monomial", "CohClass", "GenPartition", "monomial"]


Monomial = Tuple[Tuple[int, int], ...]


def monomial(*factors: Tuple[int, int]) -> Monomial:
    """Canonical creation monomial: factors sorted ascending."""
    return tuple(sorted((int(n), int(b)) for n, b in factors))


class CohClass(NamedTuple):
    """
    An even cohomology class of a surface model.

    Supports addition, subtraction, negation and multiplication by
    rational scalars. Cup products go through the owning SurfaceModel.

    :param c0: Coefficient of the fundamental class 1_X.
    :param c2: Coefficients on the degree-2 basis e_1..e_r.
    :param c4: Coefficient of the point class x.
    """

    c0: Fraction
    c2: Tuple[Fraction, ...]
    c4: Fraction

    @classmethod
    def of(
        cls,
        c0: Union[int, Fraction] = 0,
        c2: Iterable[Union[int, Fraction]] = (),
        c4: Union[int, Fraction] = 0
    ) -> "CohClass":
        return cls(Fraction(c0), tuple(Fraction(c) for c in c2), Fraction(c4))

    @classmethod
    def from_coords(cls, coords: Iterable[Union[int, Fraction]]) -> "CohClass":
        """Build from coordinates in basis order (1_X, e_1..e_r, x)."""

        cs = [Fraction(c) for c in coords]
        if len(cs) < 2:
            raise ValueError("A class needs at least the 1_X and x slots.")
        return cls(cs[0], tuple(cs[1:-1]), cs[-1])

    @property
    def r(self) -> int:
        return len(self.c2)

    @property
    def coords(self) -> Tuple[Fraction, ...]:
        """Coordinates in basis order (1_X, e_1..e_r, x)."""
        return (self.c0,) + self.c2 + (self.c4,)

    @property
    def degree(self) -> Optional[int]:
        """
        Cohomological degree if the class is homogeneous and nonzero.

        Returns 0, 2 or 4 when exactly one block is nonzero, else None.
        """

        blocks = [(0, bool(self.c0)), (2, any(self.c2)), (4, bool(self.c4))]
        nonzero = [d for d, flag in blocks if flag]
        return nonzero[0] if len(nonzero) == 1 else None

    def is_zero(self) -> bool:
        return not (self.c0 or any(self.c2) or self.c4)

    def _check(self, other: "CohClass") -> None:
        if len(other.c2) != len(self.c2):
            from .surface import ModelError
            raise ModelError("Classes belong to different surface models.")

    def __add__(self, other: "CohClass") -> "CohClass":  # type: ignore
        if not isinstance(other, CohClass):
            return NotImplemented
        self._check(other)
        return CohClass(self.c0 + other.c0,
            tuple(a + b for a, b in zip(self.c2, other.c2)),
            self.c4 + other.c4)

    def __sub__(self, other: "CohClass") -> "CohClass":
        return self + (-other)

    def __neg__(self) -> "CohClass":
        return CohClass(-self.c0, tuple(-a for a in self.c2), -self.c4)

    def __mul__(self, c: Union[int, Fraction]) -> "CohClass":  # type: ignore
        if isinstance(c, CohClass) or not isinstance(c, (int, Fraction)):
            return NotImplemented
        c = Fraction(c)
        return CohClass(c * self.c0, tuple(c * a for a in self.c2), c * self.c4)

    __rmul__ = __mul__


class GenPartition(NamedTuple):
    """
    A generalized partition: negative and positive parts with multiplicities.

    Both fields are tuples of (part, multiplicity) pairs sorted by part,
    with parts >= 1 and multiplicities >= 1. The pair (n, m) in neg stands
    for the part -n repeated m times.

    :param neg: Negative parts.
    :param pos: Positive parts.
    """

    neg: Tuple[Tuple[int, int], ...] = ()
    pos: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def of(
        cls,
        neg: Optional[Mapping[int, int]] = None,
        pos: Optional[Mapping[int, int]] = None
    ) -> "GenPartition":
        def norm(d: Optional[Mapping[int, int]]) -> Tuple[Tuple[int, int], ...]:
            items = []
            for n, m in (d or {}).items():
                if n < 1 or m < 0:
                    raise ValueError(f"Invalid part {n} with multiplicity {m}.")
                if m: items.append((n, m))
            return tuple(sorted(items))
        return cls(norm(neg), norm(pos))

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "GenPartition":
        """Build from signed nonzero parts, e.g. [-2, 1, 1]."""

        neg: Dict[int, int] = {}
        pos: Dict[int, int] = {}
        for p in parts:
            if p == 0:
                raise ValueError("Generalized partitions have no zero parts.")
            d = pos if p > 0 else neg
            d[abs(p)] = d.get(abs(p), 0) + 1
        return cls.of(neg, pos)

    @property
    def length(self) -> int:
        return sum(m for _, m in self.neg) + sum(m for _, m in self.pos)

    @property
    def size(self) -> int:
        """Signed size |lambda|."""
        return self.pos_weight - self.neg_weight

    @property
    def pos_weight(self) -> int:
        return sum(n * m for n, m in self.pos)

    @property
    def neg_weight(self) -> int:
        return sum(n * m for n, m in self.neg)

    @property
    def norm2(self) -> int:
        return sum(n * n * m for n, m in self.neg + self.pos)

    @property
    def factorial(self) -> int:
        result = 1
        for _, m in self.neg + self.pos:
            result *= factorial(m)
        return result

    def multiplicity(self, part: int) -> int:
        """Multiplicity of the signed part."""

        for n, m in (self.pos if part > 0 else self.neg):
            if n == abs(part):
                return m
        return 0

    def parts(self) -> List[int]:
        """Signed parts in operator order: ... -2, -1, 1, 2, ..."""

        result: List[int] = []
        for n, m in reversed(self.neg):
            result.extend([-n] * m)
        for n, m in self.pos:
            result.extend([n] * m)
        return result

    def creators(self) -> List[int]:
        return [n for n, m in self.neg for _ in range(m)]

    def annihilators(self) -> List[int]:
        return [n for n, m in self.pos for _ in range(m)]

    def __str__(self) -> str:
        def fmt(p: int, m: int) -> str:
            s = f"({p})" if p < 0 else str(p)
            return s if m == 1 else f"{s}^{m}"
        items = [fmt(-n, m) for n, m in reversed(self.neg)]
        items += [fmt(n, m) for n, m in self.pos]
        return "(" + " ".join(items) + ")"
