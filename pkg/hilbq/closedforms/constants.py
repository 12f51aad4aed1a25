"""Universal constants of the point-class series and first-order traces."""


from __future__ import annotations

from .brackets import signed_bracket_sums
from ..base.partitions import partitions
from ..series.zqseries import ZQSeries
from ..series.series_ops import euler_pow, sigma1_series, series_sum
from ..base.linalg import lagrange_eval, solve

from typing import (Dict, Iterator, List, NamedTuple, Optional, Sequence,
    Tuple)
from typing_extensions import Literal
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import factorial
import logging


__all__ = ["UnderdeterminedError", "ConstantsTable", "b_table", "fqxk_eval",
    "FirstOrderSample", "extract_constants"]


Label = Tuple[str, int, int]


class UnderdeterminedError(RuntimeError):
    pass


@dataclass
class ConstantsTable:
    """
    Constants indexed by (family, i, j) for the partition label (i, 1^j).

    Family "b" holds b_{(i,1^j)}; row i = 1 holds b_{(1^{j+1})}. Families
    "g", "h" and "f" hold the first-order constants.

    :param entries: Label to (value, provenance) with provenance "seeded"
        or "computed".
    :param residuals: Named series that vanish when the table is
        consistent.
    :param qmax: Truncation order used to build the table.
    """

    entries: Dict[Label, Tuple[Fraction, str]] = field(default_factory=dict)
    residuals: Dict[str, ZQSeries] = field(default_factory=dict)
    qmax: int = 0

    def __getitem__(self, label: Label) -> Fraction:
        return self.entries[label][0]

    def __contains__(self, label: object) -> bool:
        return label in self.entries

    def provenance(self, label: Label) -> str:
        return self.entries[label][1]

    def set(self, label: Label, value: Fraction, provenance: str) -> None:
        self.entries[label] = (Fraction(value), provenance)

    def b(self, i: int, j: int = 0) -> Fraction:
        return self[("b", i, j)]

    def rows(self) -> List[Tuple[str, int, int, Fraction, str]]:
        """Sorted (family, i, j, value, provenance) rows."""
        return [(f, i, j, v, p)
            for (f, i, j), (v, p) in sorted(self.entries.items())]

    def b_series(self, s: int, qmax: int) -> ZQSeries:
        """
        B_s(q) = sum_j ~b_{(s,1^j)} q^{s+j}, with ~b_{(1,1^j)} =
        (j+1) b_{(1^{j+1})} and ~b = b for s > 1.

        Raises ValueError when the table stops short of q^qmax.
        """

        if s > qmax:
            return ZQSeries._new(qmax=qmax)
        m = {}
        for j in range(qmax - s + 1):
            label = ("b", s, j)
            if label not in self.entries:
                raise ValueError(
                    f"Table lacks b_({s},1^{j}) needed up to q^{qmax}.")
            v = self[label] * (j + 1 if s == 1 else 1)
            if v: m[(s + j, ())] = v
        return ZQSeries._new(m=m, qmax=qmax)

    def is_consistent(self) -> bool:
        return not any(self.residuals.values())


def _slot_counts(
    total: int, max_slot: Optional[int] = None
) -> Iterator[Dict[int, int]]:
    # {s: m_s} with sum (s+1) m_s = total, s >= 1
    for parts in partitions(total, max_part=None if max_slot is None
            else max_slot + 1):
        if parts and parts[-1] == 1: continue
        counts: Dict[int, int] = {}
        for p in parts:
            counts[p - 1] = counts.get(p - 1, 0) + 1
        yield counts


def _power_collapsed(B: ZQSeries, s: int, m: int) -> ZQSeries:
    return (B * (-s)) ** m * Fraction(1, factorial(m))


def _power_direct(B: ZQSeries, s: int, m: int) -> ZQSeries:
    # sum over t_j >= 0, sum t_j = m, of prod (-s ~b_j q^{s+j})^{t_j} / t_j!
    qmax = B.qmax
    coeffs = [(q, v) for (q, _), v in sorted(B.items())]
    parts: List[ZQSeries] = []

    def rec(idx: int, left: int, deg: int, acc: Fraction) -> None:
        if left == 0:
            parts.append(ZQSeries._new(m={(deg, ()): acc * (-s) ** m},
                qmax=qmax))
            return
        if idx == len(coeffs): return
        q, v = coeffs[idx]
        for t in range(left, -1, -1):
            if deg + t * q > qmax: continue
            rec(idx + 1, left - t, deg + t * q,
                acc * v ** t / factorial(t))

    if m == 0:
        return ZQSeries.constant(1, qmax)
    rec(0, m, 0, Fraction(1))
    return series_sum(parts, qmax)


def _slot_power(
    B: ZQSeries, s: int, m: int, collapse: bool
) -> ZQSeries:
    """(-s B_s)^m / m!, by the multinomial theorem or by expansion."""
    return (_power_collapsed if collapse else _power_direct)(B, s, m)


def b_table(imax: int, jmax: int, collapse: bool = True) -> ConstantsTable:
    """
    Constants b_{(i,1^j)} for i <= imax, j <= jmax.

    Row 1 is seeded with sigma_1(j+1)/(j+1); later rows come from the
    recursion
    B_i / (i-1)! = sum_{sum (s+1) m_s = i+1, s < i}
        1/(sum s m_s)! prod_s (-s B_s)^{m_s} / m_s!  -  R_{i+1},
    with R_{i+1} the signed bracket sum of weight i+1.
    """

    if imax < 1:
        raise ValueError("b_table needs imax >= 1.")
    if jmax < 0:
        raise ValueError("b_table needs jmax >= 0.")
    qmax = imax + jmax
    table = ConstantsTable(qmax=qmax)
    B: Dict[int, ZQSeries] = {1: sigma1_series(qmax)}
    for j in range(jmax + 1):
        table.set(("b", 1, j), Fraction(B[1][(j + 1, ())], j + 1), "seeded")
    for i in range(2, imax + 1):
        parts = []
        for counts in _slot_counts(i + 1, i - 1):
            term = ZQSeries.constant(
                Fraction(1, factorial(sum(s * m for s, m in counts.items()))),
                qmax)
            for s, m in sorted(counts.items()):
                term = term * _slot_power(B[s], s, m, collapse)
                if not term: break
            parts.append(term)
        R = series_sum(list(signed_bracket_sums(i + 1, qmax).values()), qmax)
        B[i] = (series_sum(parts, qmax) - R) * factorial(i - 1)
        for j in range(jmax + 1):
            table.set(("b", i, j), B[i][(i + j, ())], "computed")
        logging.debug(f"b_table row {i} computed to q^{qmax}.")
    return table


def fqxk_eval(
    ks: Sequence[int],
    table: ConstantsTable,
    qmax: int,
    chi: int,
    collapse: bool = True
) -> ZQSeries:
    """
    F^{x,...,x}_{k_1,...,k_N} from the b-constants:
    (q;q)^-chi (-1)^N sum over {m_{i,s}: sum_s (s+1) m_{i,s} = k_i + 2} of
    prod_i 1/(sum_s s m_{i,s})! prod_s (-s B_s)^{m_s} / prod_i m_{i,s}!.
    """

    if any(k < 0 for k in ks):
        raise ValueError("Chern degrees must be non-negative.")
    B: Dict[int, ZQSeries] = {}
    parts = []
    for choice in product(*(list(_slot_counts(k + 2)) for k in ks)):
        c = Fraction(1)
        totals: Dict[int, int] = {}
        for counts in choice:
            c /= factorial(sum(s * m for s, m in counts.items()))
            for s, m in counts.items():
                c /= factorial(m)
                totals[s] = totals.get(s, 0) + m
        term = ZQSeries.constant(c, qmax)
        for s, m in sorted(totals.items()):
            if s not in B:
                B[s] = table.b_series(s, qmax)
            # (-s B_s)^m / m! times m!
            term = term * _slot_power(B[s], s, m, collapse) * factorial(m)
            if not term: break
        parts.append(term)
    sign = (-1) ** len(ks)
    return series_sum(parts, qmax) * euler_pow(-chi, qmax) * sign


class FirstOrderSample(NamedTuple):
    """
    Traces of one model feeding the first-order constants.

    :param chi: Euler characteristic.
    :param kk: <K, K>.
    :param kl: <L, K> for the sampled class L.
    :param f1_one: F^{1_X}_1.
    :param f1_line: F^L_1.
    """

    chi: int
    kk: Fraction
    kl: Fraction
    f1_one: ZQSeries
    f1_line: ZQSeries


Method = Literal["solve", "extrapolate", "both"]


def _reduced(samples: Sequence[FirstOrderSample], qmax: int
) -> List[Tuple[FirstOrderSample, ZQSeries, ZQSeries]]:
    return [(s, s.f1_one * euler_pow(s.chi, qmax),
        s.f1_line * euler_pow(s.chi, qmax)) for s in samples]


def _solve_fh(
    data: List[Tuple[FirstOrderSample, ZQSeries, ZQSeries]], N: int
) -> Tuple[Fraction, Fraction]:
    # chi f + kk h = y at q^N, from the first independent pair of samples
    for a in range(len(data)):
        for b in range(a + 1, len(data)):
            sa, sb = data[a][0], data[b][0]
            if sa.chi * sb.kk - sb.chi * sa.kk:
                f, h = solve([[sa.chi, sa.kk], [sb.chi, sb.kk]],
                    [data[a][1][(N, ())], data[b][1][(N, ())]])
                return f, h
    raise UnderdeterminedError(
        "No two samples with independent (chi, <K,K>); cannot separate f "
        "from h.")


def _extrapolate_h(
    data: List[Tuple[FirstOrderSample, ZQSeries, ZQSeries]], N: int
) -> Fraction:
    # at fixed <K,K> != 0 the reduced trace is linear in chi; value at 0 is kk h
    groups: Dict[Fraction, Dict[int, Fraction]] = {}
    for s, y, _ in data:
        if s.kk:
            groups.setdefault(s.kk, {})[s.chi] = y[(N, ())]
    for kk, pts in sorted(groups.items()):
        if len(pts) >= 2:
            xs = sorted(pts)
            return lagrange_eval(xs, [pts[x] for x in xs], 0) / kk
    raise UnderdeterminedError(
        "Need two samples with distinct chi at one nonzero <K,K>.")


def extract_constants(
    samples: Sequence[FirstOrderSample],
    qmax: int,
    table: Optional[ConstantsTable] = None,
    method: Method = "both"
) -> ConstantsTable:
    """
    Recover g_{(2,1^j)}, f_{(2,1^j)} and h_{(2,1^j)} for 2 + j <= qmax.

    g comes from (q;q)^chi F^L_1 / <L,K>; f and h from
    (q;q)^chi F^{1_X}_1 = sum (chi f + <K,K> h) q^{2+j}, solved exactly
    across samples and, for h, also by extrapolation to chi = 0. Records
    the residuals g+h, g-consistency and, with both methods, h-routes.
    """

    if method not in ("solve", "extrapolate", "both"):
        raise ValueError(f"Unknown extraction method '{method}'.")
    table = table if table is not None else ConstantsTable(qmax=qmax)
    data = _reduced(samples, qmax)
    lines = [(s, yl) for s, _, yl in data if s.kl]
    if not lines:
        raise UnderdeterminedError("Every sample has <L,K> = 0; g is undefined.")
    g_series = [yl / s.kl for s, yl in lines]
    g = g_series[0]
    table.residuals["g-consistency"] = series_sum(
        [x - g for x in g_series[1:]], qmax)
    h_parts: Dict[int, Fraction] = {}
    h_route_diff: Dict[int, Fraction] = {}
    for N in range(2, qmax + 1):
        j = N - 2
        table.set(("g", 2, j), g[(N, ())], "computed")
        if method in ("solve", "both"):
            f, h = _solve_fh(data, N)
            table.set(("f", 2, j), f, "computed")
            h_parts[N] = h
        if method in ("extrapolate", "both"):
            h_ex = _extrapolate_h(data, N)
            if N in h_parts:
                h_route_diff[N] = h_parts[N] - h_ex
            else:
                h_parts[N] = h_ex
    for N, h in h_parts.items():
        table.set(("h", 2, N - 2), h, "computed")
    h = ZQSeries({(N, ()): v for N, v in h_parts.items()}, qmax=qmax)
    table.residuals["g+h"] = g + h
    if method == "both":
        table.residuals["h-routes"] = ZQSeries(
            {(N, ()): v for N, v in h_route_diff.items()}, qmax=qmax)
    table.qmax = max(table.qmax, qmax)
    logging.debug(f"Extracted first-order constants from {len(samples)} "
        f"samples to q^{qmax}.")
    return table
