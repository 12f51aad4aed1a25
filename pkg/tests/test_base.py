from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hilbq.base import (CohClass, GenPartition, ModelError, SurfaceModel,
    SingularMatrixError, preset, divisor_sigma, partitions, compositions,
    stats, enum_balanced, subtract, colored_monomials)
from hilbq.base.linalg import identity, inverse, matmul, solve, lagrange_eval


small = st.integers(-2, 2)


@st.composite
def classes(draw, r):
    return CohClass.of(draw(small), [draw(small) for _ in range(r)],
        draw(small))


### Surface Models ###


def test_minimal_model_data(minimal):
    assert (minimal.r, minimal.chi, minimal.dim) == (1, 3, 3)
    assert minimal.pair(minimal.one(), minimal.point()) == 1
    assert minimal.cup(minimal.e(1), minimal.e(1)) == minimal.point()
    assert minimal.euler() == minimal.point() * 3


def test_kpos_canonical_square():
    m = preset("kpos", kk=2)
    assert m.pair(m.canonical(), m.canonical()) == 2


@pytest.mark.parametrize("P", [[[1, 1], [1, 1]], [[1, 2], [0, 1]]])
def test_bad_pairing_rejected(P):
    with pytest.raises(ModelError):
        SurfaceModel.build(P)


def test_wrong_canonical_length():
    with pytest.raises(ModelError):
        SurfaceModel.build([[1]], K=[1, 0])


def test_unknown_preset():
    with pytest.raises(ModelError):
        preset("no-such-surface")


def test_classes_of_different_models(minimal, two_class):
    with pytest.raises(ModelError):
        minimal.pair(minimal.one(), two_class.point())


def test_class_labels(kmixed):
    assert kmixed.class_named("K") == kmixed.canonical()
    assert kmixed.class_named("eX") == kmixed.euler()
    assert kmixed.class_named("e2") == kmixed.e(2)
    assert kmixed.class_named("L1") == kmixed.line("L1")
    with pytest.raises(ModelError):
        kmixed.class_named("nope")


def test_extension_keeps_pairings(kmixed):
    big = kmixed.extended(2)
    K = big.canonical()
    assert big.chi == kmixed.chi + 2
    assert big.pair(K, K) == kmixed.pair(kmixed.canonical(),
        kmixed.canonical())
    assert big.pair(K, big.line("L1")) == kmixed.pair(kmixed.canonical(),
        kmixed.line("L1"))


def test_kunneth_of_point():
    m = preset("two-class")
    xi = m.x_index
    assert m.kunneth(3, m.point().coords) == [(1, (xi, xi, xi))]


@pytest.mark.parametrize("ell", [2, 3])
@given(data=st.data())
def test_diagonal_integrates_products(ell, data):
    m = preset("two-class")
    alpha = data.draw(classes(m.r))
    betas = [data.draw(classes(m.r)) for _ in range(ell)]
    lhs = Fraction(0)
    for c, tensor in m.diagonal(ell, alpha):
        term = c
        for b, beta in zip(tensor, betas):
            term *= m.pair(b, beta)
        lhs += term
    prod = alpha
    for beta in betas:
        prod = m.cup(prod, beta)
    assert lhs == m.integrate(prod)


@given(classes(2), classes(2), classes(2))
def test_cup_associative_and_pairing_symmetric(a, b, c):
    m = preset("two-class")
    assert m.cup(m.cup(a, b), c) == m.cup(a, m.cup(b, c))
    assert m.pair(a, b) == m.pair(b, a)


### Partitions ###


def test_divisor_sigma():
    assert [divisor_sigma(n) for n in range(1, 7)] == [1, 3, 4, 7, 6, 12]


def test_partitions_and_compositions():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1),
        (1, 1, 1, 1)]
    assert list(partitions(5, k=2)) == [(4, 1), (3, 2)]
    assert len(list(compositions(4))) == 8


def test_stats():
    lam = GenPartition.from_parts([-2, 1, 1])
    assert stats(lam) == (3, 0, 6, 2)
    assert lam.parts() == [-2, 1, 1]
    assert str(lam) == "((-2) 1^2)"


def test_enum_balanced_order():
    assert enum_balanced(2, 2) == [GenPartition.of({1: 1}, {1: 1}),
        GenPartition.of({2: 1}, {2: 1})]
    assert enum_balanced(3, 2) == [GenPartition.of({1: 2}, {2: 1}),
        GenPartition.of({2: 1}, {1: 2})]
    assert enum_balanced(3, 1) == []


def test_enum_balanced_needs_two_parts():
    with pytest.raises(ValueError):
        enum_balanced(1, 3)


@given(st.integers(2, 4), st.integers(1, 5))
def test_enum_balanced_invariants(length, weight):
    found = enum_balanced(length, weight)
    assert len(set(found)) == len(found)
    for lam in found:
        assert lam.length == length
        assert lam.size == 0
        assert 1 <= lam.pos_weight <= weight


def test_subtract():
    lam = GenPartition.of({1: 1}, {1: 2})
    assert subtract(lam, GenPartition.of({1: 1}, {1: 1})) == \
        GenPartition.of({}, {1: 1})
    assert subtract(lam, GenPartition.of({2: 1})) is None


def test_colored_monomials():
    assert colored_monomials(2, 1) == (((1, 0), (1, 0)), ((2, 0),))


@given(st.integers(0, 8))
def test_colored_monomials_count_partitions(n):
    assert len(colored_monomials(n, 1)) == len(list(partitions(n)))


### Linear Algebra ###


def test_inverse_and_solve():
    X = [[2, 1], [1, 1]]
    assert inverse(X) == [[1, -1], [-1, 2]]
    assert matmul(X, inverse(X)) == identity(2)
    assert solve(X, [3, 2]) == [1, 1]


def test_singular_inverse():
    with pytest.raises(SingularMatrixError):
        inverse([[1, 2], [2, 4]])


def test_lagrange_eval():
    assert lagrange_eval([0, 1, 2], [1, 3, 7], 3) == 13
    with pytest.raises(ValueError):
        lagrange_eval([1, 1], [0, 0], 0)


def test_public_names():
    import hilbq.base as base
    import hilbq.base.symbols as symbols
    assert set(symbols.__all__) == {"Monomial", "CohClass", "GenPartition",
        "monomial"}
    assert all(hasattr(base, name) for name in base.__all__)
