"""Registered identities comparing oracle traces with closed forms."""


from __future__ import annotations

from .extrapolate import chi_extrapolate
from ..base.symbols import CohClass, GenPartition
from ..base.surface import SurfaceModel
from ..base.partitions import compositions, enum_balanced, subtract
from ..closedforms.brackets import BracketSignature, mzv_bracket
from ..closedforms.formulas import (theta, rmk914_trace, trace_pair_closed,
    closed_F0, closed_F1, closed_Fk_point, closed_ch1L, closed_chkL,
    first_order_bracket)
from ..closedforms.constants import (b_table, fqxk_eval, FirstOrderSample,
    extract_constants)
from ..components.chern import chern_op, apply_G
from ..components.oracle import (TraceOperator, oracle_F,
    oracle_trace_product, series_ch)
from ..components.vertex import (VertexOp, apply_exp_mode, apply_gamma,
    w_classes)
from ..config import Settings
from ..fock.fockvector import (FockVector, ZGraded, basis_vector, vacuum,
    graded_add, freeze_graded)
from ..fock.heisenberg import (apply_heisenberg, apply_a_sequence,
    apply_a_lambda, apply_creators)
from ..fock.pairing import trace_block, vacuum_to_one, weight_basis
from ..series.zqseries import ZQSeries
from ..series.series_ops import (coe_z0, embed, euler_pow, q_ddq,
    sigma1_series)
from ..series.utils import format_fraction

from typing import (Any, Callable, Dict, Iterator, List, Mapping, Optional,
    Sequence, Tuple, Union)
from dataclasses import dataclass
from fractions import Fraction
from functools import wraps
from itertools import product
from math import factorial
import logging


__all__ = ["Identity", "Report", "SUITES", "register", "identities",
    "run_identity", "run_suite", "first_order_samples"]


Value = Union[ZQSeries, FockVector, Mapping[Any, Fraction], Fraction, int]
Case = Tuple[str, Value, Value]
CaseFn = Callable[[Sequence[SurfaceModel], int, Settings], Iterator[Case]]

SUITES = ("fock", "identities", "constants", "abelian")


@dataclass(frozen=True)
class Identity:
    """
    A named exact identity.

    :param name: Registry name.
    :param suite: Suite the identity belongs to.
    :param cases: Generator of (label, lhs, rhs) cases over the given models.
    :param doc: One-line description.
    """

    name: str
    suite: str
    cases: CaseFn
    doc: str = ""


_REGISTRY: Dict[str, Identity] = {}


def register(name: str, suite: str) -> Callable[[CaseFn], CaseFn]:
    """Register a case generator as an identity."""

    if suite not in SUITES:
        raise ValueError(f"Unknown suite '{suite}'.")

    def wrapper(f: CaseFn) -> CaseFn:
        if name in _REGISTRY:
            raise ValueError(f"Identity name '{name}' already in registry.")

        @wraps(f)
        def cases(models: Sequence[SurfaceModel], qmax: int,
                settings: Settings) -> Iterator[Case]:
            yield from f(models, qmax, settings)

        doc = (f.__doc__ or "").strip().splitlines()
        _REGISTRY[name] = Identity(name, suite, cases, doc[0] if doc else "")
        return cases

    return wrapper


def identities(suite: str = "all") -> List[Identity]:
    if suite == "all":
        return list(_REGISTRY.values())
    if suite not in SUITES:
        raise ValueError(f"Unknown suite '{suite}'.")
    return [i for i in _REGISTRY.values() if i.suite == suite]


@dataclass
class Report:
    """
    Outcome of one identity run.

    :param identity: Identity name.
    :param model: Comma-separated model names.
    :param qmax: Truncation order.
    :param status: pass, fail or error.
    :param cases: Number of cases compared.
    :param mismatch: First failing case with the differing key and both
        values, or the error message.
    """

    identity: str
    model: str
    qmax: int
    status: str
    cases: int = 0
    mismatch: Optional[Dict[str, str]] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"identity": self.identity, "model": self.model,
            "Qmax": self.qmax, "status": self.status, "cases": self.cases}
        if self.mismatch is not None:
            out["mismatch"] = self.mismatch
        return out


def _scalar(x: Any) -> str:
    return format_fraction(Fraction(x))


def _difference(
    lhs: Value, rhs: Value
) -> Optional[Tuple[Any, Fraction, Fraction]]:
    if isinstance(lhs, ZQSeries) and isinstance(rhs, ZQSeries):
        if lhs.nz != rhs.nz:
            return "arity", Fraction(lhs.nz), Fraction(rhs.nz)
        if lhs.qmax != rhs.qmax:
            qmax = min(lhs.qmax, rhs.qmax)
            lhs, rhs = lhs.truncate(qmax), rhs.truncate(qmax)
        return lhs.first_difference(rhs)
    if isinstance(lhs, Mapping) and isinstance(rhs, Mapping):
        for k in sorted(set(lhs) | set(rhs)):
            a, b = lhs.get(k, 0), rhs.get(k, 0)
            if a != b:
                return k, Fraction(a), Fraction(b)
        return None
    if isinstance(lhs, Mapping) or isinstance(rhs, Mapping):
        raise TypeError("Cannot compare a mapping with a scalar.")
    if lhs != rhs:
        return None, Fraction(lhs), Fraction(rhs)
    return None


def run_identity(
    name: str,
    models: Sequence[SurfaceModel],
    qmax: int,
    settings: Optional[Settings] = None
) -> Report:
    """
    Run every case of a registered identity; stop at the first mismatch.

    Library errors raised by a case are reported with status error.
    """

    try:
        ident = _REGISTRY[name]
    except KeyError:
        raise ValueError(f"Unknown identity '{name}'.") from None
    settings = settings or Settings.from_env()
    label = ",".join(m.name for m in models)
    logging.debug(f"Identity {name} on {label} to q^{qmax}: start.")
    count = 0
    try:
        for case, lhs, rhs in ident.cases(models, qmax, settings):
            count += 1
            diff = _difference(lhs, rhs)
            if diff is not None:
                key, a, b = diff
                logging.debug(f"Identity {name}: fail at {case}.")
                return Report(name, label, qmax, "fail", count, {"case": case,
                    "key": repr(key), "lhs": _scalar(a), "rhs": _scalar(b)})
    except (ValueError, RuntimeError) as e:
        logging.debug(f"Identity {name}: error {e}.")
        return Report(name, label, qmax, "error", count,
            {"error": f"{type(e).__name__}: {e}"})
    logging.debug(f"Identity {name}: pass ({count} cases).")
    return Report(name, label, qmax, "pass", count)


def run_suite(
    suite: str,
    models: Sequence[SurfaceModel],
    qmax: Optional[int] = None,
    settings: Optional[Settings] = None
) -> List[Report]:
    """
    Run all identities of a suite.

    Without qmax, abelian identities use settings.extrapolation_qmax and the
    rest settings.qmax.
    """

    settings = settings or Settings.from_env()
    reports = []
    for ident in identities(suite):
        q = qmax
        if q is None:
            q = settings.extrapolation_qmax if ident.suite == "abelian" \
                else settings.qmax
        reports.append(run_identity(ident.name, models, q, settings))
    return reports


### Helpers ###


def _z(a: ZQSeries) -> ZQSeries:
    # z-free series as a one-variable series; comparison then checks z-freeness
    return embed(a, 1, ())


def _sample_classes(model: SurfaceModel) -> List[Tuple[str, CohClass]]:
    out = [("1_X", model.one())]
    if model.r:
        out.append(("e1", model.e(1)))
    out.append(("x", model.point()))
    return out


def _lines(model: SurfaceModel) -> List[Tuple[str, CohClass]]:
    return [(name, model.line(name)) for name, _ in model.line_bundles]


def _small_vectors(model: SurfaceModel, top: int) -> List[FockVector]:
    return [basis_vector(u) for n in range(top + 1)
        for u in weight_basis(model, n)]


def _flatten(g: ZGraded) -> Dict[Tuple[Tuple[int, ...], Any], Fraction]:
    return {(zs, k): c for zs, vec in g.items() for k, c in vec.items()}


def _lightest(models: Sequence[SurfaceModel]) -> SurfaceModel:
    return min(models, key=lambda m: m.r)


### Fock Suite ###


@register("commutator", "fock")
def _commutator(models, qmax, settings):
    """[a_m(a), a_n(b)] = -m delta_{m,-n} <a, b> on small vectors."""

    modes = (-2, -1, 1, 2)
    for model in models:
        classes = _sample_classes(model)
        for v in _small_vectors(model, 2):
            for (m, n), ((la, a), (lb, b)) in product(
                    product(modes, modes), product(classes, classes)):
                lhs = apply_heisenberg(model, m, a, apply_heisenberg(model, n, b, v)) \
                    - apply_heisenberg(model, n, b, apply_heisenberg(model, m, a, v))
                c = -m * model.pair(a, b) if m == -n else 0
                yield f"{model.name} m={m} n={n} {la},{lb}", lhs, v * c


@register("tau-commutator", "fock")
def _tau_commutator(models, qmax, settings):
    """Commutator of diagonal products with a single Heisenberg operator."""

    modes = (-2, -1, 1, 2)
    for model in models:
        classes = _sample_classes(model)
        for k in (1, 2):
            for ns, m in product(product(modes, repeat=k), modes):
                for (la, a), (lb, b) in product(classes, classes):
                    ab = model.cup(a, b)
                    for v in _small_vectors(model, 1):
                        lhs = (apply_a_sequence(model, ns, a,
                                apply_heisenberg(model, m, b, v))
                            - apply_heisenberg(model, m, b,
                                apply_a_sequence(model, ns, a, v)))
                        rhs = FockVector._new()
                        for t, nt in enumerate(ns):
                            if nt != -m: continue
                            rest = ns[:t] + ns[t + 1:]
                            rhs = rhs + apply_a_sequence(model, rest, ab, v) * (-nt)
                        yield f"{model.name} ns={ns} m={m} {la},{lb}", lhs, rhs


@register("tau-reorder", "fock")
def _tau_reorder(models, qmax, settings):
    """Swapping adjacent factors of a diagonal product costs an e_X term."""

    modes = (-2, -1, 1, 2)
    for model in models:
        eX = model.euler()
        for ns in product(modes, repeat=3):
            for j in range(2):
                swapped = ns[:j] + (ns[j + 1], ns[j]) + ns[j + 2:]
                rest = ns[:j] + ns[j + 2:]
                for la, a in _sample_classes(model):
                    for v in _small_vectors(model, 2):
                        lhs = apply_a_sequence(model, ns, a, v)
                        rhs = apply_a_sequence(model, swapped, a, v)
                        if ns[j] == -ns[j + 1]:
                            rhs = rhs - apply_a_sequence(model, rest,
                                model.cup(eX, a), v) * ns[j]
                        yield f"{model.name} ns={ns} j={j} {la}", lhs, rhs


@register("a-lambda-routes", "fock")
def _a_lambda_routes(models, qmax, settings):
    """Contraction and Kunneth evaluations of a_lambda agree."""

    for model in models:
        for length in (2, 3):
            for lam in enum_balanced(length, 2):
                for la, a in _sample_classes(model):
                    for v in _small_vectors(model, 2):
                        yield (f"{model.name} {lam} {la}",
                            apply_a_lambda(model, lam, a, v),
                            apply_a_sequence(model, lam.parts(), a, v))


@register("vacuum-splitting", "fock")
def _vacuum_splitting(models, qmax, settings):
    """<G w, |1>> = <G|0>, |1>> <w, |1>> for creation monomials G."""

    for model in models:
        x, one = model.point(), model.one()
        creators = [[(1, x)], [(1, x), (1, x)], [(2, x)], [(1, one)],
            [(1, x + one)]]
        for factors in creators:
            g0 = vacuum_to_one(model, apply_creators(model, factors, vacuum()))
            for w in _small_vectors(model, 2):
                lhs = vacuum_to_one(model, apply_creators(model, factors, w))
                yield f"{model.name} {factors}", lhs, g0 * vacuum_to_one(model, w)


@register("gamma-exchange", "fock")
def _gamma_exchange(models, qmax, settings):
    """Gamma_+(-1_X, x) and Gamma_-(1_X - K_X, y) commute."""

    for model in models:
        minus, plus = w_classes(model)
        for v in _small_vectors(model, 2):
            a = apply_gamma(model, VertexOp("+", plus, 0),
                apply_gamma(model, VertexOp("-", minus, 1), v, 2,
                    max_degree=2), 2)
            b = apply_gamma(model, VertexOp("-", minus, 1),
                apply_gamma(model, VertexOp("+", plus, 0), v, 2), 2,
                max_degree=2)
            yield f"{model.name} v={tuple(v)}", _flatten(a), _flatten(b)


@register("gamma-commute", "fock")
def _gamma_commute(models, qmax, settings):
    """Vertex operators of equal sign commute."""

    for model in models:
        classes = [("1_X", model.one()), ("K", model.canonical()),
            ("-1_X", -model.one())] + _lines(model)
        for sign in ("+", "-"):
            for (la, a), (lb, b) in product(classes, classes):
                for v in _small_vectors(model, 1):
                    x = apply_gamma(model, VertexOp(sign, a, 0),
                        apply_gamma(model, VertexOp(sign, b, 1), v, 2,
                            max_degree=2), 2, max_degree=2)
                    y = apply_gamma(model, VertexOp(sign, b, 1),
                        apply_gamma(model, VertexOp(sign, a, 0), v, 2,
                            max_degree=2), 2, max_degree=2)
                    yield (f"{model.name} {sign} {la},{lb}", _flatten(x),
                        _flatten(y))


def _a_lambda_graded(
    model: SurfaceModel, lam: GenPartition, alpha: CohClass, g: ZGraded
) -> ZGraded:
    # a_lambda(alpha) / lambda! on every z-component
    acc: Dict[Tuple[int, ...], FockVector] = {}
    for zs, vec in g.items():
        graded_add(acc, zs, apply_a_lambda(model, lam, alpha, vec),
            Fraction(1, lam.factorial))
    return freeze_graded(acc)


def _moved_past(
    model: SurfaceModel,
    lam: GenPartition,
    alpha: CohClass,
    gamma: CohClass,
    n: int,
    part: int,
    g: ZGraded
) -> ZGraded:
    """
    sum_i (-z^n)^i / i! a_{lam - (part^i)}(gamma^i alpha) / (lam - (part^i))!

    The sum stops once lam runs out of the signed part.
    """

    acc: Dict[Tuple[int, ...], FockVector] = {}
    beta = alpha
    i = 0
    while True:
        mu = GenPartition.from_parts([part] * i)
        rest = subtract(lam, mu)
        if rest is None: break
        c = Fraction((-1) ** i, factorial(i) * rest.factorial)
        for zs, vec in g.items():
            graded_add(acc, (zs[0] + n * i,),
                apply_a_lambda(model, rest, beta, vec), c)
        beta = model.cup(gamma, beta)
        i += 1
    return freeze_graded(acc)


def _jl_cases(models, qmax):
    for model in models:
        classes = _sample_classes(model)
        for length, n in product((2, 3), (1, 2)):
            for lam in enum_balanced(length, 2):
                for (lg, gamma), (la, alpha) in product(classes, classes):
                    for v in _small_vectors(model, min(qmax, 3)):
                        yield (model, lam, n, gamma, alpha, v,
                            f"{model.name} {lam} n={n} {lg} {la}")


@register("comm-jl", "fock")
def _comm_jl(models, qmax, settings):
    """Moving a_lambda(alpha)/lambda! right past exp(z^n/n a_{-n}(gamma))."""

    top = 2
    for model, lam, n, gamma, alpha, v, label in _jl_cases(models, qmax):
        lhs = _a_lambda_graded(model, lam, alpha, apply_exp_mode(model, -n,
            gamma, v, Fraction(1, n), zexp=n, max_power=top))
        rhs = apply_exp_mode(model, -n, gamma,
            _moved_past(model, lam, alpha, gamma, n, n, {(0,): v}),
            Fraction(1, n), zexp=n, max_power=top)
        # exact up to z^(n top)
        rhs = {zs: vec for zs, vec in rhs.items() if zs[0] <= n * top}
        yield f"{label} v={tuple(v)}", _flatten(lhs), _flatten(rhs)


@register("comm-jl-adjoint", "fock")
def _comm_jl_adjoint(models, qmax, settings):
    """Moving exp(z^n/n a_n(gamma)) right past a_lambda(alpha)/lambda!."""

    for model, lam, n, gamma, alpha, v, label in _jl_cases(models, qmax):
        lhs = apply_exp_mode(model, n, gamma,
            _a_lambda_graded(model, lam, alpha, {(0,): v}),
            Fraction(1, n), zexp=n)
        rhs = _moved_past(model, lam, alpha, gamma, n, -n,
            apply_exp_mode(model, n, gamma, v, Fraction(1, n), zexp=n))
        yield f"{label} v={tuple(v)}", _flatten(lhs), _flatten(rhs)


@register("trace-routes", "fock")
def _trace_routes(models, qmax, settings):
    """Coordinate and Gram-dual traces agree."""

    model = _lightest(models)
    top = min(qmax, 3)
    for k, (la, a) in product((0, 1), _sample_classes(model)):
        op = chern_op(model, k, a)
        inner = (lambda v, op=op: apply_G(model, op, v))
        for with_w in (False, True):
            t = TraceOperator(model, inner, with_w)
            for n in range(top + 1):
                yield (f"{model.name} G_{k}({la}) W={with_w} n={n}",
                    trace_block(model, t, n, nz=t.nz, qmax=top),
                    trace_block(model, t, n, nz=t.nz, qmax=top, via="gram"))


@register("trace-vanishing", "fock")
def _trace_vanishing(models, qmax, settings):
    """Plain traces of balanced products of high-degree classes vanish."""

    for model in models:
        classes = [("x", model.point())]
        classes += [(f"e{a}", model.e(a)) for a in range(1, model.r + 1)]
        for length in (2, 3):
            for lam in enum_balanced(length, 2):
                for la, a in classes:
                    yield (f"{model.name} {lam} {la}",
                        oracle_trace_product(model, [lam], [a], False, qmax,
                            settings),
                        ZQSeries._new(qmax=qmax))


@register("trace-pair", "fock")
def _trace_pair(models, qmax, settings):
    """Plain trace of (a_{-n} a_n)(alpha)."""

    for model in models:
        for n in range(1, min(qmax, 3) + 1):
            lam = GenPartition.of({n: 1}, {n: 1})
            for la, a in _sample_classes(model):
                yield (f"{model.name} n={n} {la}",
                    oracle_trace_product(model, [lam], [a], False, qmax,
                        settings),
                    trace_pair_closed(model, n, a, qmax))


@register("trace-symmetry", "fock")
def _trace_symmetry(models, qmax, settings):
    """Plain traces of two balanced factors are symmetric in the factors."""

    model = _lightest(models)
    lams = enum_balanced(2, 2) + enum_balanced(3, 2)
    classes = _sample_classes(model)
    for (l1, l2), ((n1, a1), (n2, a2)) in product(
            product(lams, lams), product(classes, classes)):
        yield (f"{model.name} {l1}{n1} {l2}{n2}",
            oracle_trace_product(model, [l1, l2], [a1, a2], False, qmax,
                settings),
            oracle_trace_product(model, [l2, l1], [a2, a1], False, qmax,
                settings))


### Identities Suite ###


@register("gottsche", "identities")
def _gottsche(models, qmax, settings):
    """Tr q^d W = (q;q)^-chi, z-free."""

    for model in models:
        yield (model.name, oracle_F(model, [], [], qmax, settings=settings),
            _z(euler_pow(-model.chi, qmax)))


@register("F0", "identities")
def _F0(models, qmax, settings):
    """F^alpha_0 against its closed form."""

    for model in models:
        classes = _sample_classes(model) + [("K", model.canonical())]
        for la, a in classes:
            yield (f"{model.name} {la}",
                oracle_F(model, [0], [a], qmax, settings=settings),
                _z(closed_F0(model, a, qmax)))


@register("F0-one", "identities")
def _F0_one(models, qmax, settings):
    """F^{1_X}_0 = q d/dq (q;q)^-chi."""

    for model in models:
        target = q_ddq(euler_pow(-model.chi, qmax))
        yield f"{model.name} closed", closed_F0(model, model.one(), qmax), target
        yield (f"{model.name} oracle",
            oracle_F(model, [0], [model.one()], qmax, settings=settings),
            _z(target))


@register("F1", "identities")
def _F1(models, qmax, settings):
    """F^L_1 against its closed form for line bundles."""

    for model in models:
        for la, L in _lines(model) + [("K", model.canonical())]:
            yield (f"{model.name} {la}",
                oracle_F(model, [1], [L], qmax, settings=settings),
                _z(closed_F1(model, L, qmax)))


@register("Fk-point", "identities")
def _Fk_point(models, qmax, settings):
    """F^x_k against the weight-(k+2) bracket sum; zero for odd k."""

    model = _lightest(models)
    for k in range(5):
        closed = closed_Fk_point(model, 1, k, qmax)
        if k % 2:
            yield f"{model.name} k={k} closed", closed, ZQSeries._new(qmax=qmax)
        yield (f"{model.name} k={k}",
            oracle_F(model, [k], [model.point()], qmax, settings=settings),
            _z(closed))


@register("Fk-vanishing", "identities")
def _Fk_vanishing(models, qmax, settings):
    """F^alpha_k = 0 when K alpha = e_X alpha = 0 and deg alpha < 4."""

    for model in models:
        K = model.canonical()
        for a in range(1, model.r + 1):
            alpha = model.e(a)
            if not model.cup(K, alpha).is_zero(): continue
            for k in range(4):
                yield (f"{model.name} e{a} k={k}",
                    oracle_F(model, [k], [alpha], qmax, settings=settings),
                    ZQSeries._new(qmax=qmax, nz=1))


@register("rmk914", "identities")
def _rmk914(models, qmax, settings):
    """Traces of W a_lambda / lambda! against the matched-pair closed form."""

    model = _lightest(models)
    classes = [("1_X", model.one()), ("x", model.point())] + _lines(model)[:1]
    for length in (2, 3, 4):
        for lam in enum_balanced(length, 4):
            for la, a in classes:
                yield (f"{model.name} {lam} {la}",
                    oracle_trace_product(model, [lam], [a], True, qmax,
                        settings),
                    rmk914_trace(model, lam, a, qmax))


@register("theta-equality", "identities")
def _theta_equality(models, qmax, settings):
    """Theta by brackets equals Theta by generalized partitions."""

    for model in models:
        classes = [("x", model.point()), ("1_X", model.one()),
            ("K", model.canonical())] + _lines(model)
        for k in range(5):
            for la, a in classes:
                yield (f"{model.name} k={k} {la}",
                    theta(model, a, k, qmax, via="compositions"),
                    theta(model, a, k, qmax, via="genpartitions"))


@register("theta-point", "identities")
def _theta_point(models, qmax, settings):
    """Theta^x_0 is the divisor sum series; odd Theta^x_k vanish."""

    model = _lightest(models)
    x = model.point()
    yield "k=0", theta(model, x, 0, qmax), sigma1_series(qmax)
    for k in (1, 3):
        yield f"k={k}", theta(model, x, k, qmax), ZQSeries._new(qmax=qmax)


@register("fqxk-pair", "identities")
def _fqxk_pair(models, qmax, settings):
    """Two point-class operators from the b-constants against the oracle."""

    model = _lightest(models)
    table = b_table(max(qmax, 5), max(qmax - 1, 0))
    x = model.point()
    for k1 in range(5):
        for k2 in range(5 - k1):
            yield (f"{model.name} k=({k1},{k2})",
                oracle_F(model, [k1, k2], [x, x], qmax, settings=settings),
                _z(fqxk_eval([k1, k2], table, qmax, model.chi)))


@register("ch0", "identities")
def _ch0(models, qmax, settings):
    """<ch_0^L> counts points: q d/dq (q;q)^-chi."""

    for model in models:
        for la, _ in _lines(model):
            yield (f"{model.name} {la}",
                series_ch(model, [la], [0], False, qmax, settings),
                q_ddq(euler_pow(-model.chi, qmax)))


@register("mzv-divisor", "identities")
def _mzv_divisor(models, qmax, settings):
    """The (1|1) bracket is the divisor sum series."""

    yield ("(1|1)", mzv_bracket(BracketSignature.plain([1], [1]), qmax),
        sigma1_series(qmax))


@register("mzv-reflection", "identities")
def _mzv_reflection(models, qmax, settings):
    """Plain brackets are symmetric under exchanging the two sides."""

    sides = [c for n in range(1, 4) for c in compositions(n)]
    for s, t in product(sides, sides):
        sig = BracketSignature.plain(s, t)
        rev = BracketSignature.plain(t, s)
        yield f"{s}|{t}", mzv_bracket(sig, qmax), mzv_bracket(rev, qmax)


### Constants Suite ###


@register("b-catalan", "constants")
def _b_catalan(models, qmax, settings):
    """b_(3), b_(5), b_(7) and the seeded row."""

    table = b_table(7, 6)
    expected = {3: Fraction(-1, 3), 5: Fraction(2, 5), 7: Fraction(-5, 7)}
    for i, v in expected.items():
        yield f"b_({i})", table.b(i), v
    yield "b_(1^2)", table.b(1, 1), Fraction(3, 2)
    yield "b_(1^3)", table.b(1, 2), Fraction(4, 3)


@register("b-even-rows", "constants")
def _b_even_rows(models, qmax, settings):
    """Even rows of the b-table come out zero."""

    table = b_table(7, 6)
    for i in (2, 4, 6):
        for j in range(7):
            yield f"b_({i},1^{j})", table.b(i, j), 0


@register("b-routes", "constants")
def _b_routes(models, qmax, settings):
    """Multinomial collapse and direct t-enumeration give the same table."""

    a = b_table(5, 4)
    b = b_table(5, 4, collapse=False)
    yield "table", {r[:3]: r[3] for r in a.rows()}, {r[:3]: r[3] for r in b.rows()}
    model = _lightest(models)
    for ks in ([0], [2], [0, 0], [1, 1]):
        yield (f"fqxk {ks}", fqxk_eval(ks, a, min(qmax, 5), model.chi),
            fqxk_eval(ks, a, min(qmax, 5), model.chi, collapse=False))


@register("fqxk-single", "constants")
def _fqxk_single(models, qmax, settings):
    """One point-class operator from the b-constants against brackets."""

    table = b_table(max(qmax, 5), max(qmax - 1, 0))
    for model in models:
        for k in range(5):
            yield (f"{model.name} k={k}",
                fqxk_eval([k], table, qmax, model.chi),
                closed_Fk_point(model, 1, k, qmax))


def first_order_samples(
    model: SurfaceModel,
    extras: Sequence[int],
    line: str,
    qmax: int,
    settings: Optional[Settings] = None
) -> List[FirstOrderSample]:
    """Oracle traces F^{1_X}_1 and F^L_1 over extensions of one model."""

    out = []
    for e in extras:
        m = model.extended(e)
        K, L = m.canonical(), m.line(line)
        out.append(FirstOrderSample(
            chi=m.chi, kk=m.pair(K, K), kl=m.pair(L, K),
            f1_one=coe_z0(oracle_F(m, [1], [m.one()], qmax, settings=settings)),
            f1_line=coe_z0(oracle_F(m, [1], [L], qmax, settings=settings))))
    return out


@register("g-plus-h", "constants")
def _g_plus_h(models, qmax, settings):
    """Extracted first-order constants: g + h = 0 and g is the bracket half."""

    from ..base.surface import preset
    q = min(qmax, settings.extrapolation_qmax + 1)
    samples = (first_order_samples(preset("kpos", kk=1), (0, 1), "L1", q,
            settings)
        + first_order_samples(preset("kpos", kk=2), (0, 1), "L1", q,
            settings))
    table = extract_constants(samples, q)
    zero = ZQSeries._new(qmax=q)
    for name in ("g+h", "g-consistency", "h-routes"):
        yield name, table.residuals[name], zero
    half = first_order_bracket(q) / 2
    g = ZQSeries({(2 + j, ()): table[("g", 2, j)] for j in range(q - 1)},
        qmax=q)
    yield "g", g, half


### Abelian Suite ###


def _abelian_family(
    model: SurfaceModel,
    series: Callable[[SurfaceModel], ZQSeries],
    qmax: int
) -> ZQSeries:
    family = [(m.chi, series(m)) for m in
        (model.extended(e) for e in range(qmax + 1))]
    return chi_extrapolate(family, 0)


@register("ch1-abelian", "abelian")
def _ch1_abelian(models, qmax, settings):
    """Reduced <ch_1^L> extrapolated to e_X = 0 against its closed form."""

    model = _lightest([m for m in models if any(m.K)] or models)
    for la, L in _lines(model)[:1]:
        limit = _abelian_family(model,
            lambda m: series_ch(m, [la], [1], True, qmax, settings), qmax)
        yield f"{model.name} {la}", limit, closed_ch1L(model, L, qmax)


@register("chk-abelian", "abelian")
def _chk_abelian(models, qmax, settings):
    """Reduced <ch_k^L> of a K = 0 surface extrapolated to chi = 0."""

    flat = [m for m in models if not any(m.K)]
    if not flat:
        return
    model = _lightest(flat)
    for la, L in _lines(model)[:1]:
        for k in (2, 3):
            limit = _abelian_family(model,
                lambda m, k=k: series_ch(m, [la], [k], True, qmax, settings),
                qmax)
            yield f"{model.name} {la} k={k}", limit, closed_chkL(model, L, k, qmax)


@register("F1-one-abelian", "abelian")
def _F1_one_abelian(models, qmax, settings):
    """Reduced F^{1_X}_1 at chi = 0 is -<K,K>/2 times the first-order bracket."""

    model = _lightest([m for m in models if any(m.K)] or models)
    K = model.canonical()
    limit = _abelian_family(model, lambda m: coe_z0(oracle_F(
        m, [1], [m.one()], qmax, settings=settings))
        * euler_pow(m.chi, qmax), qmax)
    yield model.name, limit, first_order_bracket(qmax) * (-model.pair(K, K) / 2)
