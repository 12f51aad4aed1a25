from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hilbq.base import GenPartition, compositions, preset
from hilbq.closedforms import (Slot, BracketSignature, mzv_bracket,
    signatures, signed_bracket_sums, theta, lambda_product, closed_F0,
    closed_F1, closed_Fk_point, closed_chkL, closed_ch1L, first_order_bracket,
    UnderdeterminedError, ConstantsTable, b_table, fqxk_eval,
    FirstOrderSample, extract_constants)
from hilbq.series import ZQSeries, block, euler_pow, q_ddq, sigma1_series


small_compositions = st.sampled_from(
    [c for n in range(1, 4) for c in compositions(n)])


### Brackets ###


def test_divisor_bracket():
    s = mzv_bracket(BracketSignature.plain([1], [1]), 4)
    assert s.coefficients() == [0, 1, 3, 4, 7]


def test_bracket_with_empty_side_is_zero():
    assert not mzv_bracket(BracketSignature.plain([2], []), 4)


def test_bracket_rejects_bad_slots():
    with pytest.raises(ValueError):
        mzv_bracket(BracketSignature.plain([0], [1]), 4)
    unbounded = BracketSignature((Slot(1, qexp=0),), (Slot(1),))
    with pytest.raises(ValueError):
        mzv_bracket(unbounded, 4)


def test_bracket_weights():
    sig = BracketSignature.plain([2, 1], [3])
    assert (sig.weight, sig.s_weight) == (6, 3)


def test_signatures_of_weight_three():
    found = list(signatures(3))
    assert len(found) == 4
    assert all(sig.weight == 3 for sig in found)


@given(small_compositions, small_compositions)
def test_bracket_reflection(s, t):
    assert mzv_bracket(BracketSignature.plain(s, t), 5) == \
        mzv_bracket(BracketSignature.plain(t, s), 5)


def test_weight_two_bracket_sum():
    assert signed_bracket_sums(2, 5) == {1: -sigma1_series(5)}


### Trace Formulas ###


def test_lambda_product_of_pair():
    lam = GenPartition.of({1: 1}, {1: 1})
    assert lambda_product(lam, 4) == -block(1, 2, 1, qmax=4)


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_theta_routes_agree(k, kmixed):
    for label in ("point", "one", "K", "L1"):
        alpha = kmixed.class_named(label)
        assert theta(kmixed, alpha, k, 5, via="compositions") == \
            theta(kmixed, alpha, k, 5, via="genpartitions")


def test_theta_bad_route(minimal):
    with pytest.raises(ValueError):
        theta(minimal, minimal.point(), 0, 3, via="brackets")


def test_F0_of_one_is_point_count(model):
    assert closed_F0(model, model.one(), 6) == \
        q_ddq(euler_pow(-model.chi, 6))


def test_point_series_at_degree_zero(model):
    assert closed_Fk_point(model, 1, 0, 6) == \
        closed_F0(model, model.point(), 6)


@pytest.mark.parametrize("k", [1, 3])
def test_odd_point_series_vanish(k, minimal):
    assert not closed_Fk_point(minimal, 1, k, 6)


def test_F1_requires_vanishing_euler_product(minimal):
    with pytest.raises(ValueError):
        closed_F1(minimal, minimal.one(), 4)
    assert not closed_F1(minimal, minimal.line("L1"), 4)


def test_chkL_degree_two(minimal):
    L = minimal.line("L1")
    assert closed_chkL(minimal, L, 2, 5) == sigma1_series(5) * Fraction(1, 2)


def test_chkL_isotropic_line(two_class):
    # L2 = e1 + e2 with <L2, L2> = 0
    assert not closed_chkL(two_class, two_class.line("L2"), 3, 5)


def test_ch1L_without_canonical_class(minimal):
    assert not closed_ch1L(minimal, minimal.line("L1"), 5)


def test_ch1L_pure_canonical_square():
    m = preset("kpos", kk=2)
    assert closed_ch1L(m, m.zero(), 5) == -first_order_bracket(5)


### Constants ###


@pytest.fixture(scope="module")
def table():
    return b_table(7, 6)


def test_known_b_constants(table):
    assert table.b(3) == Fraction(-1, 3)
    assert table.b(5) == Fraction(2, 5)
    assert table.b(7) == Fraction(-5, 7)
    assert table.b(1, 1) == Fraction(3, 2)
    assert table.provenance(("b", 1, 1)) == "seeded"
    assert table.provenance(("b", 3, 0)) == "computed"


def test_even_rows_vanish(table):
    assert all(not table.b(i, j) for i in (2, 4, 6) for j in range(7))


def test_collapse_matches_direct_enumeration():
    assert b_table(5, 3).rows() == b_table(5, 3, collapse=False).rows()


def test_b_table_bounds():
    with pytest.raises(ValueError):
        b_table(0, 3)
    with pytest.raises(ValueError):
        b_table(3, 1).b_series(2, 6)


def test_b_series_uses_tilde_convention(table):
    assert table.b_series(1, 4) == sigma1_series(4)


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_fqxk_single_operator(k, table, minimal):
    assert fqxk_eval([k], table, 6, minimal.chi) == \
        closed_Fk_point(minimal, 1, k, 6)


def test_fqxk_routes_agree(table):
    assert fqxk_eval([0, 2], table, 6, 3) == \
        fqxk_eval([0, 2], table, 6, 3, collapse=False)


QMAX = 4
G = ZQSeries({(2, ()): 1, (3, ()): 2, (4, ()): 3}, qmax=QMAX)
F = ZQSeries({(2, ()): Fraction(1, 2), (4, ()): -1}, qmax=QMAX)


def _sample(chi, kk, kl):
    E = euler_pow(-chi, QMAX)
    return FirstOrderSample(chi, Fraction(kk), Fraction(kl),
        (F * chi - G * kk) * E, G * kl * E)


def test_extract_constants_recovers_synthetic_values():
    samples = [_sample(3, 1, 1), _sample(4, 1, 1), _sample(3, 2, 2)]
    out = extract_constants(samples, QMAX)
    for j in range(3):
        assert out[("g", 2, j)] == G[(2 + j, ())]
        assert out[("h", 2, j)] == -G[(2 + j, ())]
        assert out[("f", 2, j)] == F[(2 + j, ())]
    assert out.is_consistent()


def test_extract_constants_without_pairing():
    with pytest.raises(UnderdeterminedError):
        extract_constants([_sample(3, 1, 0), _sample(4, 1, 0)], QMAX)


def test_extract_constants_without_independent_samples():
    with pytest.raises(UnderdeterminedError):
        extract_constants([_sample(3, 1, 1), _sample(6, 2, 1)], QMAX,
            method="solve")


def test_table_rows_are_sorted():
    t = ConstantsTable()
    t.set(("g", 2, 1), Fraction(1), "computed")
    t.set(("b", 3, 0), Fraction(-1, 3), "computed")
    assert [r[0] for r in t.rows()] == ["b", "g"]
