"""Heisenberg operators a_m(alpha) and their diagonal products a_lambda."""


from __future__ import annotations

from .fockvector import FockVector
from ..base.symbols import CohClass, GenPartition, Monomial
from ..base.surface import SurfaceModel, Coords

from typing import Iterator, List, Sequence, Tuple
from bisect import insort
from fractions import Fraction
from functools import lru_cache


__all__ = ["apply_basis", "apply_heisenberg", "apply_a_sequence",
    "apply_a_lambda", "apply_creators"]


def _insert(key: Monomial, n: int, b: int) -> Monomial:
    items = list(key)
    insort(items, (n, b))
    return tuple(items)


def _removals(key: Monomial, n: int) -> Iterator[Tuple[int, int, Monomial]]:
    # (b, multiplicity, key with one (n, b) removed) per distinct factor
    j = 0
    while j < len(key):
        f = key[j]
        if f[0] > n: break
        k = 1
        while j + k < len(key) and key[j + k] == f:
            k += 1
        if f[0] == n:
            yield f[1], k, key[:j] + key[j + 1:]
        j += k


def apply_basis(
    model: SurfaceModel, m: int, i: int, v: FockVector
) -> FockVector:
    """Apply a_m(b_i) for the basis class with index i."""

    if m == 0:
        raise ValueError("Heisenberg modes must be nonzero.")
    out = FockVector._new(prot=False)
    if m < 0:
        for key, c in v.items():
            out.accumulate(_insert(key, -m, i), c)
        return out.protect()
    G = model.basis_pairing[i]
    for key, c in v.items():
        for b, k, rest in _removals(key, m):
            if G[b]:
                out.accumulate(rest, -m * G[b] * k * c)
    return out.protect()


def apply_heisenberg(
    model: SurfaceModel, m: int, alpha: CohClass, v: FockVector
) -> FockVector:
    """
    Apply a_m(alpha).

    Creation (m < 0) inserts a factor; annihilation (m > 0) removes one,
    following [a_m(a), a_n(b)] = -m delta_{m,-n} <a, b> and a_m|0> = 0.
    """

    if m == 0:
        raise ValueError("Heisenberg modes must be nonzero.")
    u = model.check(alpha).coords
    out = FockVector._new(prot=False)
    if m < 0:
        for key, c in v.items():
            for i, ci in enumerate(u):
                if ci: out.accumulate(_insert(key, -m, i), ci * c)
        return out.protect()
    pv = model.pair_vector(u)
    for key, c in v.items():
        for b, k, rest in _removals(key, m):
            if pv[b]:
                out.accumulate(rest, -m * pv[b] * k * c)
    return out.protect()


def apply_creators(
    model: SurfaceModel,
    factors: Sequence[Tuple[int, CohClass]],
    v: FockVector
) -> FockVector:
    """Apply prod a_{-n}(alpha) for (n, alpha) in factors."""

    for n, alpha in reversed(factors):
        v = apply_heisenberg(model, -n, alpha, v)
    return v


def apply_a_sequence(
    model: SurfaceModel,
    ns: Sequence[int],
    alpha: CohClass,
    v: FockVector
) -> FockVector:
    """
    Apply (a_{n_1} ... a_{n_k})(alpha) in the given operator order.

    Expands tau_{k*} alpha into Kunneth terms and applies the rightmost
    factor first. The empty sequence acts as the scalar integral of alpha.
    """

    u = model.check(alpha).coords
    if not ns:
        return v * u[model.x_index]
    out = FockVector._new(prot=False)
    for c, tensor in model.kunneth(len(ns), u):
        w = v
        for n, i in reversed(list(zip(ns, tensor))):
            w = apply_basis(model, n, i, w)
            if not w: break
        out.accumulate_from(w, c)
    return out.protect()


@lru_cache(maxsize=4096)
def _kunneth(model: SurfaceModel, ell: int, u: Coords) -> tuple:
    return tuple(model.kunneth(ell, u))


def _contract(
    model: SurfaceModel,
    key: Monomial,
    ann: Sequence[int],
    u: Coords,
    coef: Fraction
) -> Iterator[Tuple[Monomial, Fraction, Coords]]:
    # contracting a slot of tau_{l*}alpha against b gives tau_{(l-1)*}(alpha b)
    if not ann:
        yield key, coef, u
        return
    p = ann[0]
    for b, k, rest in _removals(key, p):
        w = model.cup_basis(u, b)
        if any(w):
            yield from _contract(model, rest, ann[1:], w, -p * k * coef)


def apply_a_lambda(
    model: SurfaceModel, lam: GenPartition, alpha: CohClass, v: FockVector
) -> FockVector:
    """
    Apply the normal-ordered diagonal product a_lambda(alpha).

    Annihilators act on v first. Each one removes a matching factor and
    multiplies its class into alpha; the creators then insert the Kunneth
    terms of the contracted class.
    """

    u = model.check(alpha).coords
    ann: List[int] = lam.annihilators()
    cre: List[int] = lam.creators()
    xi = model.x_index
    out = FockVector._new(prot=False)
    for key, c in v.items():
        for rest, coef, w in _contract(model, key, ann, u, c):
            if not cre:
                if w[xi]: out.accumulate(rest, coef * w[xi])
                continue
            for kc, tensor in _kunneth(model, len(cre), w):
                new = tuple(sorted(rest + tuple(zip(cre, tensor))))
                out.accumulate(new, coef * kc)
    return out.protect()
