"""
Vertex operators Gamma_+-(L, z) and W = Gamma_-(1_X - K_X, z) Gamma_+(-1_X, z).

Z-graded results are dicts from z-exponent tuples to FockVectors.
"""


from __future__ import annotations

from ..base.symbols import CohClass, Monomial
from ..base.surface import SurfaceModel, Coords
from ..base.partitions import colored_monomials
from ..fock.fockvector import (FockVector, ZGraded, graded_add,
    freeze_graded)
from ..fock.heisenberg import apply_heisenberg

from typing import (Counter as CounterT, Dict, Iterator, List, NamedTuple,
    Optional, Tuple, Union)
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial


__all__ = ["VertexOp", "apply_exp_mode", "apply_gamma", "apply_W",
    "w_matrix_element", "w_classes"]


class VertexOp(NamedTuple):
    """
    Gamma_+(L, z) = exp(sum z^-n/n a_n(L)) or
    Gamma_-(L, z) = exp(sum z^n/n a_{-n}(L)).

    :param sign: "+" or "-".
    :param cls: The class L.
    :param slot: Index of the z-variable.
    """

    sign: str
    cls: CohClass
    slot: int = 0


def _as_graded(v: Union[FockVector, ZGraded], nz: int) -> ZGraded:
    if isinstance(v, FockVector):
        return {(0,) * nz: v}
    return v


def _shift(zs: Tuple[int, ...], slot: int, d: int) -> Tuple[int, ...]:
    out = list(zs)
    out[slot] += d
    return tuple(out)


def _weight(key: Monomial) -> int:
    return sum(n for n, _ in key)


def apply_exp_mode(
    model: SurfaceModel,
    m: int,
    gamma: CohClass,
    v: Union[FockVector, ZGraded],
    c: Fraction = Fraction(1),
    zexp: int = 0,
    nz: int = 1,
    slot: int = 0,
    max_power: Optional[int] = None
) -> ZGraded:
    """
    Apply exp(c z^zexp a_m(gamma)), truncated after max_power terms.

    Annihilation modes terminate on their own; creation modes need
    max_power.
    """

    if m < 0 and max_power is None:
        raise ValueError("A creation exponential needs max_power.")
    acc: Dict[Tuple[int, ...], FockVector] = {}
    for zs, vec in _as_graded(v, nz).items():
        term = vec
        t = 0
        while term:
            graded_add(acc, _shift(zs, slot, t * zexp), term)
            t += 1
            if max_power is not None and t > max_power: break
            term = apply_heisenberg(model, m, gamma, term) * (Fraction(c) / t)
    return freeze_graded(acc)


@lru_cache(maxsize=256)
def _creations(
    model: SurfaceModel, L: Coords, degree: int
) -> Tuple[Tuple[Monomial, Fraction, int], ...]:
    # monomials R of weight <= degree with coefficient prod (L_b/n)^m / m!
    out: List[Tuple[Monomial, Fraction, int]] = []
    for d in range(degree + 1):
        for R in colored_monomials(d, model.dim):
            coef = Fraction(1)
            for (n, b), mult in Counter(R).items():
                coef *= (L[b] / n) ** mult / factorial(mult)
                if not coef: break
            if coef:
                out.append((R, coef, d))
    return tuple(out)


def _removal_choices(
    key: Monomial, shift: Coords
) -> Iterator[Tuple[Monomial, Fraction, int]]:
    # exp(sum z^-n/n a_n(L)) translates a_{-n}(b) by shift[b] z^-n
    counts = Counter(key)
    active = [(f, k) for f, k in sorted(counts.items()) if shift[f[1]]]
    if not active:
        yield key, Fraction(1), 0
        return
    for ds in product(*(range(k + 1) for _, k in active)):
        coef = Fraction(1)
        removed = 0
        left = Counter(counts)
        for ((n, b), k), d in zip(active, ds):
            if not d: continue
            coef *= comb(k, d) * shift[b] ** d
            removed += n * d
            left[(n, b)] -= d
        yield tuple(sorted(left.elements())), coef, removed


def apply_gamma(
    model: SurfaceModel,
    op: VertexOp,
    v: Union[FockVector, ZGraded],
    nz: int = 1,
    max_degree: Optional[int] = None,
    max_weight: Optional[int] = None
) -> ZGraded:
    """
    Apply a vertex operator to a (z-graded) vector.

    Gamma_- is expanded up to created weight max_degree and drops terms
    whose total weight exceeds max_weight; at least one bound is needed.
    Gamma_+ is finite on every vector.
    """

    model.check(op.cls)
    if not 0 <= op.slot < nz:
        raise ValueError(f"z-slot {op.slot} out of range for {nz} variables.")
    L = op.cls.coords
    acc: Dict[Tuple[int, ...], FockVector] = {}
    if op.sign == "-":
        if max_degree is None and max_weight is None:
            raise ValueError("Gamma_- needs max_degree or max_weight.")
        for zs, vec in _as_graded(v, nz).items():
            for key, c in vec.items():
                w = _weight(key)
                bound = max_degree if max_degree is not None else max_weight
                if max_weight is not None:
                    bound = min(bound, max_weight - w)
                if bound < 0: continue
                for R, coef, d in _creations(model, L, bound):
                    new = tuple(sorted(key + R))
                    graded_add(acc, _shift(zs, op.slot, d),
                        FockVector._new({new: coef * c}))
    elif op.sign == "+":
        shift = tuple(-p for p in model.pair_vector(L))
        for zs, vec in _as_graded(v, nz).items():
            for key, c in vec.items():
                for rest, coef, removed in _removal_choices(key, shift):
                    graded_add(acc, _shift(zs, op.slot, -removed),
                        FockVector._new({rest: coef * c}))
    else:
        raise ValueError(f"Vertex operator sign must be + or -, got {op.sign}.")
    return freeze_graded(acc)


def w_classes(model: SurfaceModel) -> Tuple[CohClass, CohClass]:
    """The classes (1_X - K_X, -1_X) entering W at t = 1."""
    return model.one() - model.canonical(), -model.one()


def apply_W(
    model: SurfaceModel,
    v: Union[FockVector, ZGraded],
    nz: int = 1,
    slot: int = 0,
    max_degree: Optional[int] = None,
    max_weight: Optional[int] = None
) -> ZGraded:
    """W(z) = Gamma_-(1_X - K_X, z) Gamma_+(-1_X, z); Gamma_+ acts first."""

    minus, plus = w_classes(model)
    out = apply_gamma(model, VertexOp("+", plus, slot), v, nz)
    return apply_gamma(model, VertexOp("-", minus, slot), out, nz,
        max_degree=max_degree, max_weight=max_weight)


def w_matrix_element(
    model: SurfaceModel, u: Monomial, t: Monomial
) -> Optional[Tuple[int, Fraction]]:
    """
    The coefficient [u] W t as (z-exponent, value), or None if it vanishes.

    Gamma_+(-1_X) can only strip x-factors, and Gamma_-(1_X - K_X) never
    creates them, so the stripped set is forced: t and u must agree on
    x-factors after stripping, and u - t' must be free of x-factors.
    """

    xi = model.x_index
    cu: CounterT = Counter(u)
    ct: CounterT = Counter(t)
    coef = Fraction(1)
    for f, k in ct.items():
        if f[1] == xi:
            d = k - cu.get(f, 0)
            if d < 0: return None
            if d: coef *= comb(k, d)
        elif cu.get(f, 0) < k:
            return None
    K = model.K
    for f, k in cu.items():
        n, b = f
        if b == xi:
            if ct.get(f, 0) < k: return None
            continue
        extra = k - ct.get(f, 0)
        if not extra: continue
        Lb = Fraction(1) if b == 0 else -K[b - 1]
        if not Lb: return None
        coef *= (Lb / n) ** extra / factorial(extra)
    return _weight(u) - _weight(t), coef
