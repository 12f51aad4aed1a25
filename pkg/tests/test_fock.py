from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hilbq.base import CohClass, GenPartition, enum_balanced, preset
from hilbq.base.linalg import identity, matmul
from hilbq.fock import (FockVector, vacuum, basis_vector, apply_heisenberg,
    apply_a_sequence, apply_a_lambda, apply_creators, weight_basis,
    pair_monomials, pairing, gram, dual_matrix, trace_block, vacuum_to_one)
from hilbq.series import euler_pow, series_sum


small = st.integers(-2, 2)


@st.composite
def classes(draw, r=1):
    return CohClass.of(draw(small), [draw(small) for _ in range(r)],
        draw(small))


### FockVector ###


def test_keys_are_canonical_and_zeros_pruned():
    v = FockVector({((2, 0), (1, 1)): 1, ((1, 1), (2, 0)): 2, ((1, 0),): 0})
    assert dict(v) == {((1, 1), (2, 0)): 3}


def test_creation_modes_must_be_positive():
    with pytest.raises(ValueError):
        FockVector({((0, 0),): 1})


def test_protected_vector_rejects_mutation():
    with pytest.raises(RuntimeError):
        vacuum().accumulate((), Fraction(1))
    v = vacuum().copy()
    v.accumulate(((1, 0),), Fraction(2))
    assert v[((1, 0),)] == 2


def test_weights_and_components():
    v = FockVector({((1, 0),): 1, ((1, 0), (2, 1)): 1})
    assert v.weights() == (1, 3)
    assert v.component(3) == FockVector({((1, 0), (2, 1)): 1})


### Heisenberg Operators ###


def test_annihilator_kills_vacuum(minimal):
    assert not apply_heisenberg(minimal, 2, minimal.one(), vacuum())


def test_creation_then_annihilation(minimal):
    v = apply_heisenberg(minimal, -1, minimal.point(), vacuum())
    assert apply_heisenberg(minimal, 1, minimal.one(), v) == -vacuum()


@given(classes(), classes(), st.integers(1, 3))
def test_commutator_on_vacuum(a, b, m):
    model = preset("minimal")
    v = apply_heisenberg(model, m, a,
        apply_heisenberg(model, -m, b, vacuum()))
    assert v == vacuum() * (-m * model.pair(a, b))


@given(classes(), classes())
def test_creation_is_linear(a, b):
    model = preset("minimal")
    v = basis_vector(((1, 2),))
    assert apply_heisenberg(model, -2, a + b, v) == \
        apply_heisenberg(model, -2, a, v) + apply_heisenberg(model, -2, b, v)


def test_creators_in_order(minimal):
    x = minimal.point()
    v = apply_creators(minimal, [(1, x), (2, minimal.one())], vacuum())
    assert v == basis_vector(((1, 2), (2, 0)))


def test_empty_sequence_integrates(minimal):
    v = basis_vector(((1, 0),))
    assert apply_a_sequence(minimal, [], minimal.point() * 3, v) == v * 3


def test_number_operator_on_weight_one(minimal):
    lam = GenPartition.of({1: 1}, {1: 1})
    for b in range(minimal.dim):
        v = basis_vector(((1, b),))
        assert apply_a_lambda(minimal, lam, minimal.one(), v) == -v


@pytest.mark.parametrize("lam", enum_balanced(2, 2) + enum_balanced(3, 2))
def test_a_lambda_matches_ordered_sequence(lam, two_class):
    for alpha in (two_class.one(), two_class.e(2), two_class.point()):
        for n in range(3):
            for u in weight_basis(two_class, n):
                v = basis_vector(u)
                assert apply_a_lambda(two_class, lam, alpha, v) == \
                    apply_a_sequence(two_class, lam.parts(), alpha, v)


### Pairing and Traces ###


def test_pair_monomials_sign(minimal):
    xi = minimal.x_index
    assert pair_monomials(minimal, ((1, xi),), ((1, 0),)) == 1
    assert pair_monomials(minimal, ((1, xi),), ((2, 0),)) == 0


def test_pairing_is_bilinear(minimal):
    u = basis_vector(((1, 2),))
    w = basis_vector(((1, 0),)) * 3
    assert pairing(minimal, u + u, w) == 6


@pytest.mark.parametrize("n", [1, 2, 3])
def test_gram_block_is_symmetric_and_invertible(n, two_class):
    G = gram(two_class, n)
    assert all(G[i][j] == G[j][i] for i in range(len(G)) for j in range(i))
    assert matmul(G, dual_matrix(two_class, n)) == identity(len(G))


def test_vacuum_to_one(minimal):
    xi = minimal.x_index
    assert vacuum_to_one(minimal, basis_vector(((1, xi), (1, xi))) * 2) == 2
    assert vacuum_to_one(minimal, basis_vector(((1, 0), (1, xi)))) == 0
    assert vacuum_to_one(minimal, vacuum()) == 1


@pytest.mark.parametrize("via", ["coordinates", "gram"])
def test_identity_trace_is_euler_product(via, minimal):
    blocks = [trace_block(minimal, lambda v: v, n, qmax=4, via=via)
        for n in range(5)]
    assert series_sum(blocks, 4) == euler_pow(-minimal.chi, 4)


def test_unknown_trace_route(minimal):
    with pytest.raises(ValueError):
        trace_block(minimal, lambda v: v, 1, via="diagonal")
