from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hilbq.series import (ZQSeries, ArityError, to_fraction, euler_pow, block,
    coe_z0, q_ddq, sigma1_series, embed, series_sum)


QMAX = 5

coefficient = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def series(draw, nz=0):
    m = draw(st.dictionaries(
        st.tuples(st.integers(0, QMAX),
            st.tuples(*[st.integers(-2, 2)] * nz)),
        coefficient, max_size=5))
    return ZQSeries(m, qmax=QMAX, nz=nz)


def test_euler_pow_gives_partition_numbers():
    assert euler_pow(-1, 6).coefficients() == [1, 1, 2, 3, 5, 7, 11]


def test_euler_pow_pentagonal():
    assert euler_pow(1, 7).coefficients() == [1, -1, -1, 0, 0, 1, 0, 1]


@given(st.integers(-30, 30))
def test_euler_pow_inverse(c):
    assert euler_pow(c, 8) * euler_pow(-c, 8) == ZQSeries.constant(1, 8)


def test_block_expansion():
    assert block(1, 2, 1, qmax=4).coefficients() == [0, 1, 2, 3, 4]
    s = block(2, 1, 0, zstep=1, qmax=4)
    assert s.nz == 1
    assert sorted(s) == [(0, (2,)), (2, (2,)), (4, (2,))]


def test_block_rejects_bad_part():
    with pytest.raises(ValueError):
        block(0, 1, 1, qmax=3)


def test_sigma1_series():
    assert sigma1_series(4).coefficients() == [0, 1, 3, 4, 7]


def test_zero_coefficients_pruned():
    s = ZQSeries({(1, ()): 1, (2, ()): 0}, qmax=3)
    assert list(s) == [(1, ())]


def test_construction_drops_high_orders():
    s = ZQSeries({(1, ()): 1, (4, ()): 1}, qmax=3)
    assert (4, ()) not in s


def test_product_truncates_to_smaller_order():
    a = ZQSeries.from_coeffs([1, 1, 1, 1, 1], qmax=4)
    b = ZQSeries.from_coeffs([1, 1], qmax=2)
    assert (a * b).qmax == 2
    assert (a * b).coefficients() == [1, 2, 2]


def test_mixed_arity_raises():
    with pytest.raises(ArityError):
        ZQSeries.constant(1, 3) + ZQSeries.monomial(1, 1, (1,), qmax=3)


def test_coe_z0_keeps_balanced_terms():
    s = ZQSeries({(1, (0,)): 2, (1, (1,)): 5, (3, (0,)): -1}, qmax=4, nz=1)
    assert coe_z0(s) == ZQSeries({(1, ()): 2, (3, ()): -1}, qmax=4)


def test_q_ddq():
    s = ZQSeries.from_coeffs([3, 1, 2], qmax=2)
    assert q_ddq(s).coefficients() == [0, 1, 4]


def test_embed_moves_variables():
    s = ZQSeries.monomial(1, 2, (3,), qmax=4)
    assert embed(s, 2, (1,)) == ZQSeries.monomial(1, 2, (0, 3), qmax=4)


def test_series_sum_matches_repeated_addition():
    terms = [block(n, 1, 1, qmax=5) for n in range(1, 4)]
    assert series_sum(terms, 5) == terms[0] + terms[1] + terms[2]


def test_to_fraction():
    assert to_fraction("3/4") == Fraction(3, 4)
    with pytest.raises(ValueError):
        to_fraction("0.5")
    with pytest.raises(TypeError):
        to_fraction(0.5)


@given(series(), series(), series())
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a + b) + c == a + (b + c)


@given(series(1), series(1), series(1))
def test_distributivity(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(series(), series())
def test_commutativity(a, b):
    assert a * b == b * a
    assert a - b == -(b - a)


@given(series(1), series(1))
def test_coe_z0_of_separated_variables(a, b):
    a2 = embed(a, 2, (0,))
    b2 = embed(b, 2, (1,))
    assert coe_z0(a2 * b2) == coe_z0(a) * coe_z0(b)
