"""Pairing, Gram blocks and graded traces on Fock space."""


from __future__ import annotations

from .fockvector import FockVector, ZGraded, basis_vector
from .heisenberg import apply_basis
from ..base.surface import SurfaceModel
from ..base.symbols import Monomial
from ..base.partitions import colored_monomials
from ..series.zqseries import ZQSeries
from ..base.linalg import inverse, Matrix

from typing import (Callable, Dict, Hashable, List, Optional, Tuple, TypeVar,
    Union)
from typing_extensions import Literal
from fractions import Fraction
from threading import Lock
import logging


__all__ = ["weight_basis", "pair_monomials", "pairing", "gram", "dual_matrix",
    "trace_block", "vacuum_to_one"]


T = TypeVar("T")


class _Memo:
    """Thread-safe memo computing each key at most once."""

    def __init__(self) -> None:
        self._lock = Lock()
        self._entries: Dict[Hashable, list] = {}

    def get(self, key: Hashable, compute: Callable[[], T]) -> T:
        with self._lock:
            entry = self._entries.get(key)
            if entry is None:
                entry = self._entries[key] = [Lock(), False, None]
        with entry[0]:
            if not entry[1]:
                entry[2] = compute()
                entry[1] = True
        return entry[2]

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()


_GRAMS = _Memo()
_DUALS = _Memo()


def weight_basis(model: SurfaceModel, n: int) -> Tuple[Monomial, ...]:
    """Canonical creation monomials of weight n."""
    return colored_monomials(n, model.dim)


def _shape(key: Monomial) -> Tuple[int, ...]:
    return tuple(n for n, _ in key)


def pair_monomials(model: SurfaceModel, u: Monomial, w: Monomial) -> Fraction:
    """<u, w> via the adjoint rule a_{-n}(b)^* = (-1)^n a_n(b)."""

    if _shape(u) != _shape(w):
        return Fraction(0)
    vec = basis_vector(w)
    sign = 1
    for n, b in u:
        vec = apply_basis(model, n, b, vec)
        sign *= (-1) ** n
        if not vec: return Fraction(0)
    return sign * vec[()]


def pairing(model: SurfaceModel, v: FockVector, w: FockVector) -> Fraction:
    total = Fraction(0)
    for ku, cu in v.items():
        for kw, cw in w.items():
            if len(ku) == len(kw):
                total += cu * cw * pair_monomials(model, ku, kw)
    return total


def _build_gram(model: SurfaceModel, n: int) -> Matrix:
    basis = weight_basis(model, n)
    index = {k: i for i, k in enumerate(basis)}
    groups: Dict[Tuple[int, ...], List[Monomial]] = {}
    for k in basis:
        groups.setdefault(_shape(k), []).append(k)
    N = len(basis)
    G = [[Fraction(0)] * N for _ in range(N)]
    for group in groups.values():
        for u in group:
            for w in group:
                G[index[u]][index[w]] = pair_monomials(model, u, w)
    logging.debug(f"Built weight-{n} Gram block of size {N} for {model.name}.")
    return G


def gram(model: SurfaceModel, n: int) -> Matrix:
    """Gram matrix over weight_basis(model, n); cached per (model, n)."""
    return _GRAMS.get((model, n), lambda: _build_gram(model, n))


def dual_matrix(model: SurfaceModel, n: int) -> Matrix:
    """
    Inverse Gram matrix D: the dual of basis element j is sum_l D[l][j] u_l.

    Raises SingularMatrixError for a degenerate block.
    """

    return _DUALS.get((model, n), lambda: inverse(gram(model, n)))


Operator = Callable[[FockVector], Union[FockVector, ZGraded]]


def _graded(image: Union[FockVector, ZGraded], nz: int) -> ZGraded:
    if isinstance(image, FockVector):
        return {(0,) * nz: image}
    return image


def trace_block(
    model: SurfaceModel,
    op: Operator,
    n: int,
    nz: int = 0,
    qmax: Optional[int] = None,
    via: Literal["coordinates", "gram"] = "coordinates"
) -> ZQSeries:
    """
    The q^n term of the graded trace of op on the weight-n block.

    The coordinate route sums [u] op(u) over the monomial basis and uses
    op.diagonal(u) when the operator provides it. The gram route pairs
    op(u_j) against the Gram-dual basis.

    :param op: Operator returning a FockVector or a z-graded family.
    :param n: Weight of the block.
    :param nz: Number of z-variables in op's grading.
    :param qmax: Truncation order of the result; defaults to n.
    :param via: "coordinates" or "gram".
    """

    qmax = n if qmax is None else qmax
    basis = weight_basis(model, n)
    acc: Dict[Tuple[int, ...], Fraction] = {}
    if via == "coordinates":
        diagonal = getattr(op, "diagonal", None)
        for u in basis:
            if diagonal is not None:
                entries = diagonal(u)
            else:
                vec = basis_vector(u)
                entries = {zs: img[u] for zs, img in
                    _graded(op(vec), nz).items()}
            for zs, c in entries.items():
                if c: acc[zs] = acc.get(zs, 0) + c
    elif via == "gram":
        G = gram(model, n)
        D = dual_matrix(model, n)
        index = {k: i for i, k in enumerate(basis)}
        for j, u in enumerate(basis):
            for zs, img in _graded(op(basis_vector(u)), nz).items():
                total = Fraction(0)
                for key, c in img.items():
                    k = index.get(key)
                    if k is None: continue
                    row = G[k]
                    total += c * sum((row[l] * D[l][j]
                        for l in range(len(basis)) if row[l]), Fraction(0))
                if total: acc[zs] = acc.get(zs, 0) + total
    else:
        raise ValueError(f"Unknown trace route '{via}'.")
    logging.debug(f"Trace block n={n} ({via}) on {model.name}: "
        f"{len(basis)} states.")
    return ZQSeries({(n, zs): c for zs, c in acc.items()}, qmax=qmax, nz=nz)


def vacuum_to_one(model: SurfaceModel, v: FockVector) -> Fraction:
    """
    <v, |1>> with |1> = exp(a_{-1}(1_X))|0>.

    Only monomials built from a_{-1}(x) pair nonzero, each to 1.
    """

    point = (1, model.x_index)
    return sum((c for key, c in v.items() if all(f == point for f in key)),
        Fraction(0))
