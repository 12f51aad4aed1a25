from fractions import Fraction

import pytest
from typing_extensions import get_args

from hilbq.base import GenPartition, preset
from hilbq.components import (AdmissibilityError, chern_op, apply_G,
    chern_terms, VertexOp, apply_gamma, apply_W, apply_exp_mode,
    w_matrix_element, oracle_F, oracle_trace_product, ch_terms, series_ch)
from hilbq.components.chern import Mode
from hilbq.closedforms import closed_F0, trace_pair_closed, rmk914_trace
from hilbq.fock import vacuum, basis_vector, weight_basis
from hilbq.series import embed, euler_pow


### Chern Operators ###


def test_mode_selection(minimal):
    assert chern_op(minimal, 0, minimal.one()).mode == "full"
    assert chern_op(minimal, 1, minimal.point()).mode == "full"
    assert chern_op(minimal, 2, minimal.one()).mode == "euler"
    assert chern_op(minimal, 2, minimal.point()).mode == "leading"


def test_modes_are_the_declared_literals(minimal, kmixed):
    modes = set(get_args(Mode))
    assert modes == {"full", "leading", "euler"}
    for model in (minimal, kmixed):
        for k in range(4):
            for alpha in (model.one(), model.point()):
                try:
                    op = chern_op(model, k, alpha)
                except AdmissibilityError:
                    continue
                assert op.mode in modes


def test_leading_mode_rejects_euler_term(minimal):
    with pytest.raises(AdmissibilityError):
        chern_op(minimal, 2, minimal.one(), "leading")


def test_nonzero_canonical_is_inadmissible(kpos):
    with pytest.raises(AdmissibilityError, match="g_1,lambda"):
        chern_op(kpos, 2, kpos.one())


def test_bad_degree_and_mode(minimal):
    with pytest.raises(ValueError):
        chern_op(minimal, -1, minimal.one())
    with pytest.raises(ValueError):
        chern_op(minimal, 1, minimal.one(), "leading")


def test_G0_annihilates_vacuum(minimal):
    op = chern_op(minimal, 0, minimal.one())
    assert not apply_G(minimal, op, vacuum())
    assert chern_terms(minimal, op, 0) == ()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_G0_of_one_counts_points(n, minimal):
    op = chern_op(minimal, 0, minimal.one())
    for u in weight_basis(minimal, n):
        v = basis_vector(u)
        assert apply_G(minimal, op, v) == v * n


def test_first_order_canonical_terms(kpos):
    op = chern_op(kpos, 1, kpos.one())
    extra = [t for t in chern_terms(kpos, op, 3) if t[2] == kpos.canonical()]
    assert [(c, lam) for c, lam, _ in extra] == [
        (Fraction(-1, 2), GenPartition.of({2: 1}, {2: 1})),
        (Fraction(-1), GenPartition.of({3: 1}, {3: 1}))]


def test_ch_terms(minimal):
    L = minimal.line("L1")
    terms = ch_terms(minimal, L, 2)
    assert [(k, c) for k, _, c in terms] == [(2, 1), (1, 1), (0, Fraction(1, 2))]
    assert terms[2][1] == minimal.point()
    assert ch_terms(minimal, L, 0) == [(0, minimal.one(), 1)]


### Vertex Operators ###


def test_gamma_minus_on_vacuum(minimal):
    op = VertexOp("-", minimal.point())
    out = apply_gamma(minimal, op, vacuum(), max_degree=1)
    assert out == {(0,): vacuum(), (1,): basis_vector(((1, 2),))}


def test_gamma_minus_needs_bound(minimal):
    with pytest.raises(ValueError):
        apply_gamma(minimal, VertexOp("-", minimal.one()), vacuum())


def test_gamma_plus_strips_factors(minimal):
    # Gamma_+(1_X) pairs only with x-factors
    v = basis_vector(((1, 2),))
    out = apply_gamma(minimal, VertexOp("+", minimal.one()), v)
    assert out == {(0,): v, (-1,): -vacuum()}


def test_exp_mode_matches_gamma_on_single_mode(minimal):
    v = basis_vector(((1, 2),))
    out = apply_exp_mode(minimal, 1, minimal.one(), v, zexp=-1)
    assert out == {(0,): v, (-1,): -vacuum()}


def test_W_on_vacuum(minimal):
    assert apply_W(minimal, vacuum(), max_weight=0) == {(0,): vacuum()}


@pytest.mark.parametrize("n", [1, 2])
def test_W_has_unit_diagonal(n, kmixed):
    for u in weight_basis(kmixed, n):
        assert w_matrix_element(kmixed, u, u) == (0, 1)


### Oracle ###


def test_gottsche(minimal):
    assert oracle_F(minimal, [], [], 3) == embed(euler_pow(-3, 3), 1, ())


@pytest.mark.slow
@pytest.mark.parametrize("label", ["one", "e1", "K", "point"])
def test_F0_against_closed_form(label, kmixed):
    alpha = kmixed.class_named(label)
    assert oracle_F(kmixed, [0], [alpha], 3) == \
        embed(closed_F0(kmixed, alpha, 3), 1, ())


def test_plain_pair_trace(minimal):
    lam = GenPartition.of({1: 1}, {1: 1})
    assert oracle_trace_product(minimal, [lam], [minimal.one()], False, 3) == \
        trace_pair_closed(minimal, 1, minimal.one(), 3)


@pytest.mark.slow
@pytest.mark.parametrize("lam", [GenPartition.of({1: 1}, {1: 1}),
    GenPartition.of({1: 2}, {2: 1})])
def test_rmk914_against_oracle(lam, minimal):
    for alpha in (minimal.one(), minimal.line("L1")):
        assert oracle_trace_product(minimal, [lam], [alpha], True, 3) == \
            rmk914_trace(minimal, lam, alpha, 3)


def test_series_ch_rejects_inadmissible(kpos):
    with pytest.raises(AdmissibilityError):
        series_ch(kpos, ["L1"], [2], True, 3)


def test_series_ch_arity(minimal):
    with pytest.raises(ValueError):
        series_ch(minimal, ["L1"], [1, 2], True, 3)
