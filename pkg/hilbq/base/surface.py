"""
A formal even-cohomology surface: graded basis, cup product, pairing and
Kunneth expansions of diagonal pushforwards.

The basis is indexed 0 = 1_X, 1..r = e_1..e_r, r+1 = x.
"""


from __future__ import annotations

from .symbols import CohClass
from .linalg import inverse, SingularMatrixError

from typing import (Callable, Dict, Iterable, List, Mapping, Optional,
    Sequence, Tuple, Union)
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
import logging


__all__ = ["ModelError", "SurfaceModel", "PRESETS", "preset"]


Vector = Tuple[Fraction, ...]
Coords = Tuple[Fraction, ...]
Tensor = Tuple[int, ...]
Number = Union[int, Fraction]


class ModelError(ValueError):
    pass


def _vector(v: Iterable[Number], r: int, what: str) -> Vector:
    vec = tuple(Fraction(c) for c in v)
    if len(vec) != r:
        raise ModelError(f"{what} has {len(vec)} entries, expected {r}.")
    return vec


@dataclass(frozen=True)
class SurfaceModel:
    """
    A formal model of H^even(X) for a smooth projective surface.

    :param r: Number of degree-2 basis classes.
    :param P: Symmetric invertible pairing matrix on e_1..e_r.
    :param K: Canonical class K_X in the degree-2 span.
    :param line_bundles: Named degree-2 classes L_i.
    :param name: Label used in reports.
    """

    r: int
    P: Tuple[Vector, ...]
    K: Vector
    line_bundles: Tuple[Tuple[str, Vector], ...] = ()
    name: str = "custom"

    @classmethod
    def build(
        cls,
        P: Sequence[Sequence[Number]],
        K: Optional[Sequence[Number]] = None,
        line_bundles: Optional[Mapping[str, Sequence[Number]]] = None,
        name: str = "custom"
    ) -> "SurfaceModel":
        r = len(P)
        return cls(
            r=r,
            P=tuple(_vector(row, r, "Pairing row") for row in P),
            K=_vector(K if K is not None else [0] * r, r, "K"),
            line_bundles=tuple(sorted(
                (str(k), _vector(v, r, f"Line bundle {k}"))
                for k, v in (line_bundles or {}).items())),
            name=name)

    def __post_init__(self) -> None:
        if self.r < 0:
            raise ModelError("Number of degree-2 classes must be >= 0.")
        if len(self.P) != self.r or any(len(row) != self.r for row in self.P):
            raise ModelError(f"Pairing matrix must be {self.r}x{self.r}.")
        for a in range(self.r):
            for b in range(a):
                if self.P[a][b] != self.P[b][a]:
                    raise ModelError("Pairing matrix must be symmetric.")
        if len(self.K) != self.r:
            raise ModelError("K must lie in the degree-2 span.")
        for name, v in self.line_bundles:
            if len(v) != self.r:
                raise ModelError(f"Line bundle {name} has wrong length.")
        try:
            self.Pinv
        except SingularMatrixError:
            raise ModelError("Pairing matrix is not invertible.") from None
        logging.debug(f"Validated surface model {self.name} (r={self.r}).")

    ### Derived Data ###

    @cached_property
    def Pinv(self) -> Tuple[Vector, ...]:
        return tuple(tuple(row) for row in inverse(self.P))

    @property
    def chi(self) -> int:
        """Total even Betti number r + 2."""
        return self.r + 2

    @property
    def dim(self) -> int:
        """Size of the basis {1_X, e_1..e_r, x}."""
        return self.r + 2

    @property
    def x_index(self) -> int:
        return self.r + 1

    @cached_property
    def basis_pairing(self) -> Tuple[Vector, ...]:
        """Gram matrix of the pairing on the full basis."""

        n = self.dim
        G = [[Fraction(0)] * n for _ in range(n)]
        G[0][n - 1] = G[n - 1][0] = Fraction(1)
        for a in range(self.r):
            for b in range(self.r):
                G[a + 1][b + 1] = self.P[a][b]
        return tuple(tuple(row) for row in G)

    @cached_property
    def dual_basis(self) -> Tuple[Coords, ...]:
        """Coordinates of the dual basis classes b_i^v, <b_i, b_j^v> = delta."""

        n = self.dim
        duals = []
        for i in range(n):
            v = [Fraction(0)] * n
            if i == 0:
                v[n - 1] = Fraction(1)
            elif i == n - 1:
                v[0] = Fraction(1)
            else:
                for c in range(self.r):
                    v[c + 1] = self.Pinv[c][i - 1]
            duals.append(tuple(v))
        return tuple(duals)

    @cached_property
    def support_labels(self) -> Tuple[str, ...]:
        return ("1",) + tuple(f"e{a}" for a in range(1, self.r + 1)) + ("x",)

    ### Distinguished Classes ###

    def zero(self) -> CohClass:
        return CohClass.of(0, [0] * self.r, 0)

    def one(self) -> CohClass:
        return CohClass.of(1, [0] * self.r, 0)

    def point(self) -> CohClass:
        return CohClass.of(0, [0] * self.r, 1)

    def canonical(self) -> CohClass:
        return CohClass(Fraction(0), self.K, Fraction(0))

    def euler(self) -> CohClass:
        """e_X = chi * x."""
        return CohClass.of(0, [0] * self.r, self.chi)

    def e(self, a: int) -> CohClass:
        """The degree-2 basis class e_a, 1-based."""

        if not 1 <= a <= self.r:
            raise ModelError(f"No degree-2 class e_{a} in a rank-{self.r} model.")
        c2 = [0] * self.r
        c2[a - 1] = 1
        return CohClass.of(0, c2, 0)

    def line(self, name: str) -> CohClass:
        for k, v in self.line_bundles:
            if k == name:
                return CohClass(Fraction(0), v, Fraction(0))
        raise ModelError(f"Unknown line bundle '{name}' in model {self.name}.")

    def basis_class(self, i: int) -> CohClass:
        coords = [0] * self.dim
        coords[i] = 1
        return CohClass.from_coords(coords)

    def class_named(self, label: str) -> CohClass:
        """
        Resolve a class label: one, point, K, eX, e<a> or a line-bundle name.
        """

        table: Dict[str, Callable[[], CohClass]] = {
            "one": self.one, "1": self.one, "point": self.point,
            "x": self.point, "K": self.canonical, "eX": self.euler}
        if label in table:
            return table[label]()
        if label.startswith("e") and label[1:].isdigit():
            return self.e(int(label[1:]))
        return self.line(label)

    ### Ring Structure ###

    def check(self, alpha: CohClass) -> CohClass:
        if len(alpha.c2) != self.r:
            raise ModelError(
                f"Class of rank {len(alpha.c2)} used with a rank-{self.r} "
                f"model.")
        return alpha

    def _form(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        total = Fraction(0)
        for a, ua in enumerate(u):
            if not ua: continue
            row = self.P[a]
            for b, vb in enumerate(v):
                if vb: total += ua * row[b] * vb
        return total

    def cup(self, alpha: CohClass, beta: CohClass) -> CohClass:
        self.check(alpha); self.check(beta)
        c0 = alpha.c0 * beta.c0
        c2 = tuple(alpha.c0 * b + beta.c0 * a
            for a, b in zip(alpha.c2, beta.c2))
        c4 = (alpha.c0 * beta.c4 + alpha.c4 * beta.c0
            + self._form(alpha.c2, beta.c2))
        return CohClass(c0, c2, c4)

    def pair(self, alpha: CohClass, beta: CohClass) -> Fraction:
        """Intersection pairing <alpha, beta>."""

        self.check(alpha); self.check(beta)
        return (alpha.c0 * beta.c4 + alpha.c4 * beta.c0
            + self._form(alpha.c2, beta.c2))

    def integrate(self, alpha: CohClass) -> Fraction:
        return self.check(alpha).c4

    def power(self, alpha: CohClass, m: int) -> CohClass:
        if m < 0:
            raise ValueError("Cup powers must be non-negative.")
        result = self.one()
        for _ in range(m):
            result = self.cup(result, alpha)
        return result

    ### Coordinate Kernels ###

    def cup_coords(self, u: Coords, v: Coords) -> Coords:
        n = self.dim
        c0 = u[0] * v[0]
        mid = tuple(u[0] * v[i] + v[0] * u[i] for i in range(1, n - 1))
        c4 = u[0] * v[n - 1] + u[n - 1] * v[0] + self._form(u[1:-1], v[1:-1])
        return (c0,) + mid + (c4,)

    def cup_basis(self, u: Coords, i: int) -> Coords:
        """Coordinates of alpha * b_i for alpha given by coordinates u."""

        n = self.dim
        zero = Fraction(0)
        if i == 0:
            return tuple(u)
        if i == n - 1:
            return (zero,) * (n - 1) + (u[0],)
        out = [zero] * n
        out[i] = u[0]
        out[n - 1] = sum((u[b + 1] * self.P[b][i - 1]
            for b in range(self.r)), zero)
        return tuple(out)

    def pair_vector(self, u: Coords) -> Coords:
        """The vector (<alpha, b_i>)_i for alpha given by coordinates u."""

        G = self.basis_pairing
        n = self.dim
        return tuple(sum((u[j] * G[j][i] for j in range(n) if u[j]),
            Fraction(0)) for i in range(n))

    def kunneth(self, ell: int, u: Coords) -> List[Tuple[Fraction, Tensor]]:
        """
        Kunneth expansion of tau_{ell*} alpha over basis tensors.

        The coefficient of b_{i_1} x ... x b_{i_ell} is the integral of
        alpha * prod b_{i_s}^v; only the patterns below survive.
        """

        if ell < 1:
            raise ValueError("Diagonal pushforwards need ell >= 1.")
        n = self.dim
        xi = n - 1
        if ell == 1:
            return [(c, (i,)) for i, c in enumerate(u) if c]
        terms: List[Tuple[Fraction, Tensor]] = []
        base = [xi] * ell
        if u[xi]:
            terms.append((u[xi], tuple(base)))
        for s in range(ell):
            for i in range(1, n - 1):
                if u[i]:
                    t = base[:]; t[s] = i
                    terms.append((u[i], tuple(t)))
        if u[0]:
            for s in range(ell):
                t = base[:]; t[s] = 0
                terms.append((u[0], tuple(t)))
            for s1, s2 in combinations(range(ell), 2):
                for a in range(self.r):
                    for b in range(self.r):
                        c = self.Pinv[a][b]
                        if c:
                            t = base[:]; t[s1] = a + 1; t[s2] = b + 1
                            terms.append((u[0] * c, tuple(t)))
        return terms

    def diagonal(
        self, ell: int, alpha: CohClass
    ) -> List[Tuple[Fraction, Tuple[CohClass, ...]]]:
        """Kunneth terms of tau_{ell*} alpha as tuples of basis classes."""

        self.check(alpha)
        return [(c, tuple(self.basis_class(i) for i in t))
            for c, t in self.kunneth(ell, alpha.coords)]

    ### Families ###

    def extended(self, extra: int, name: Optional[str] = None) -> "SurfaceModel":
        """
        Add extra orthogonal degree-2 classes with self-pairing 1.

        Pairings among K and the line bundles are unchanged; chi grows by
        extra.
        """

        if extra < 0:
            raise ValueError("Cannot remove classes from a model.")
        r = self.r + extra
        P = [list(row) + [0] * extra for row in self.P]
        for a in range(extra):
            row = [0] * r; row[self.r + a] = 1
            P.append(row)
        pad = (Fraction(0),) * extra
        return SurfaceModel(
            r=r,
            P=tuple(tuple(Fraction(c) for c in row) for row in P),
            K=self.K + pad,
            line_bundles=tuple((k, v + pad) for k, v in self.line_bundles),
            name=name or f"{self.name}+{extra}")


def _minimal() -> SurfaceModel:
    return SurfaceModel.build([[1]], K=[0], line_bundles={"L1": [1]},
        name="minimal")


def _two_class() -> SurfaceModel:
    return SurfaceModel.build([[1, 0], [0, -1]], K=[0, 0],
        line_bundles={"L1": [1, 0], "L2": [1, 1]}, name="two-class")


def _three_class() -> SurfaceModel:
    return SurfaceModel.build([[1, 0, 0], [0, -1, 0], [0, 0, -1]],
        K=[0, 0, 0], line_bundles={"L1": [1, 0, 0], "L2": [0, 1, 1]},
        name="three-class")


def _kpos(kk: Number = 1) -> SurfaceModel:
    # K = e_1 with <K, K> = kk
    return SurfaceModel.build([[kk]], K=[1], line_bundles={"L1": [1]},
        name="kpos")


def _kmixed() -> SurfaceModel:
    return SurfaceModel.build([[1, 0], [0, -1]], K=[2, 1],
        line_bundles={"L1": [1, 0], "L2": [0, 1]}, name="kmixed")


PRESETS: Dict[str, Callable[..., SurfaceModel]] = {
    "minimal": _minimal,
    "two-class": _two_class,
    "three-class": _three_class,
    "kpos": _kpos,
    "kmixed": _kmixed,
}


def preset(name: str, **kwds: Number) -> SurfaceModel:
    """Return a preset model by name; kpos accepts kk=<K,K>."""

    try:
        factory = PRESETS[name]
    except KeyError:
        raise ModelError(f"Unknown surface preset '{name}'.") from None
    return factory(**kwds)
