import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bethe_wronski.combinatorics import Partition, conjugate, num_syt, partitions_of
from bethe_wronski.symfunc import (SymFunc, bethe_dimension, bethe_dimension_table, compositions,
                                   convert_basis, exp_specialization, exp_specialization_series,
                                   hall_product_coefficient, power_sum, schur)

from oracles import all_partitions, poly_product, schur_coefficient, schur_polynomial

F = Fraction


def _row_sum_poly(k, nvars):
    total: dict = {}
    for lam in all_partitions(k):
        for key, v in schur_polynomial(lam, nvars).items():
            total[key] = total.get(key, 0) + v
    return total


# ------------------------------------------------------------- conversions

def test_conversion_examples():
    assert convert_basis(schur((1, 1)), "powersum") == SymFunc(2, {(1, 1): F(1, 2), (2,): F(-1, 2)}, "powersum")
    assert convert_basis(power_sum((2,)), "schur") == SymFunc(2, {(2,): 1, (1, 1): -1}, "schur")


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=7, max_size=7))
def test_round_trip_degree_five(values):
    f = SymFunc(5, {lam: v for lam, v in zip(partitions_of(5), values)}, "schur")
    back = convert_basis(convert_basis(f, "powersum"), "schur")
    assert back.coeffs == f.coeffs and back.basis == "schur"


def test_cross_basis_equality_and_sums():
    assert schur((2,)) + schur((1, 1)) == power_sum((1, 1))
    assert schur((3,)).scaled(2) == SymFunc(3, {(3,): 2})
    with pytest.raises(ValueError):
        schur((2,)) + schur((3,))


def test_symfunc_validation():
    with pytest.raises(ValueError):
        SymFunc(3, {(2,): 1})
    with pytest.raises(ValueError):
        SymFunc(2, {}, "monomial")
    with pytest.raises(ValueError):
        convert_basis(schur((1,)), "elementary")


# ------------------------------------------------- exponential specialization

@pytest.mark.parametrize("n", range(1, 6))
def test_exp_specialization_of_power_of_p1(n):
    assert exp_specialization(power_sum([1] * n)) == [0] * n + [1]
    assert exp_specialization(convert_basis(power_sum([1] * n), "schur")) == [0] * n + [1]


def test_exp_specialization_examples():
    assert exp_specialization(schur((2, 2))) == [0, 0, 0, 0, F(1, 12)]
    assert exp_specialization(power_sum((2, 1))) == [0, 0, 0, 0]


def test_exp_specialization_of_example_tau():
    z1, z2 = F(2), F(3)
    tau = {(): z1 * z2, (1,): z1 + z2, (2,): F(2)}
    assert exp_specialization_series(tau) == [6, 5, 1]
    tau_dual = {(): z1 * z2, (1,): z1 + z2, (1, 1): F(2)}
    assert exp_specialization_series(tau_dual) == [6, 5, 1]


# ------------------------------------------------------- inner products

@pytest.mark.parametrize("n", range(2, 6))
def test_hall_coefficients_match_polynomial_expansion(n):
    for split in ((1, n - 1), (2, n - 2)):
        if split[1] <= 0:
            continue
        for a in partitions_of(split[0]):
            for b in partitions_of(split[1]):
                prod = poly_product([schur_polynomial(a, n), schur_polynomial(b, n)])
                for nu in partitions_of(n):
                    assert hall_product_coefficient(nu, [a, b]) == schur_coefficient(nu, prod, n)


@pytest.mark.parametrize("kappa", [c for n in range(1, 6) for c in compositions(n)], ids=str)
def test_bethe_dimension_matches_polynomial_expansion(kappa):
    n = sum(kappa)
    prod = poly_product([_row_sum_poly(k, n) for k in kappa])
    for nu in partitions_of(n):
        assert bethe_dimension(nu, kappa) == schur_coefficient(nu, prod, n)


def test_bethe_dimension_examples():
    assert bethe_dimension((3, 1), (2, 1, 1)) == 3
    assert bethe_dimension(None, (2, 1, 1)) == 10
    assert [bethe_dimension(nu, (2, 1, 1)) for nu in partitions_of(4)] == [1, 3, 2, 3, 1]
    assert bethe_dimension(None, (4,)) == 5


@pytest.mark.parametrize("n", range(1, 8))
def test_bethe_dimension_extremes(n):
    assert bethe_dimension(None, (n,)) == len(partitions_of(n))
    for nu in partitions_of(n):
        assert bethe_dimension(nu, [1] * n) == num_syt(nu)
    assert bethe_dimension(None, [1] * n) == sum(num_syt(nu) for nu in partitions_of(n))


@pytest.mark.parametrize("n", range(1, 7))
def test_small_blocks_criterion(n):
    full = sum(num_syt(nu) for nu in partitions_of(n))
    for kappa in compositions(n):
        table = bethe_dimension_table(kappa)
        assert all(isinstance(v, int) and v >= 0 for v in table.values())
        assert (sum(table.values()) == full) == (max(kappa) <= 2), kappa
        for nu in (Partition((n,)), Partition([1] * n)):
            assert table[nu] == num_syt(nu)


@settings(max_examples=40, deadline=None)
@given(st.permutations([0, 1, 2]), st.integers(0, 10**6))
def test_hall_coefficient_is_symmetric(order, seed):
    import random
    rng = random.Random(seed)
    sizes = [rng.randint(1, 2) for _ in range(3)]
    mus = [rng.choice(partitions_of(k)) for k in sizes]
    for nu in partitions_of(sum(sizes)):
        base = hall_product_coefficient(nu, mus)
        assert base >= 0
        assert hall_product_coefficient(nu, [mus[i] for i in order]) == base
        assert hall_product_coefficient(conjugate(nu), [conjugate(m) for m in mus]) == base


def test_dimension_argument_checks():
    with pytest.raises(ValueError):
        bethe_dimension((2, 1), (2, 2))
    with pytest.raises(ValueError):
        bethe_dimension(None, (2, 0))
    with pytest.raises(ValueError):
        hall_product_coefficient((2,), [(1,)])


def test_compositions():
    assert compositions(3) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert len(compositions(6)) == 2 ** 5
    assert math.comb(5, 2) == sum(1 for c in compositions(6) if len(c) == 3)
