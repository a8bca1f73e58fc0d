import random
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from flint import fmpq_mat

from bethe_wronski.combinatorics import (Permutation, character, contains, num_syt,
                                         partitions_of)
from bethe_wronski.scalars import exact_matrix, mat_scale, mat_trace, matrix_to_json
from bethe_wronski.specht import (RepForm, alpha_matrix, build_rep, group_sweep, orthogonalizer,
                                  projection_scale, rep_matrix, rep_to_json,
                                  restricted_character_trace, sign_twist, standard_tableaux,
                                  to_orthogonal)

SHAPES_UP_TO_5 = [nu for n in range(1, 6) for nu in partitions_of(n)]


def _random_perm(rng, n):
    imgs = list(range(1, n + 1))
    rng.shuffle(imgs)
    return Permutation(imgs)


def test_sign_module_generator():
    rep = build_rep((1, 1), RepForm.SEMINORMAL)
    assert rep.gens[0] == exact_matrix([[-1]])


def test_two_one_seminormal_generator():
    rep = build_rep((2, 1), RepForm.SEMINORMAL)
    assert rep.gens[1] == exact_matrix([[Fraction(1, 2), 1], [Fraction(3, 4), Fraction(-1, 2)]])
    assert rep.gens[1] * rep.gens[1] == rep.identity()


def test_two_two_generators_are_traceless():
    for form in RepForm:
        rep = build_rep((2, 2), form)
        for g in rep.gens:
            assert abs(float(mat_trace(g))) < 1e-12


def test_tableaux_sorted_by_reading_word():
    tabs = standard_tableaux((3, 2))
    assert len(tabs) == 5
    words = [tuple(v for row in reversed(t) for v in row) for t in tabs]
    assert words == sorted(words)


@pytest.mark.parametrize("nu", SHAPES_UP_TO_5, ids=str)
def test_coxeter_relations(nu):
    rep = build_rep(nu, RepForm.SEMINORMAL)
    g, eye = rep.gens, rep.identity()
    assert rep.dim == num_syt(nu)
    for i in range(len(g)):
        assert g[i] * g[i] == eye
        assert mat_trace(g[i]) == character(nu, [2] + [1] * (rep.n - 2))
        if i + 1 < len(g):
            assert g[i] * g[i + 1] * g[i] == g[i + 1] * g[i] * g[i + 1]
        for j in range(i + 2, len(g)):
            assert g[i] * g[j] == g[j] * g[i]


@pytest.mark.parametrize("nu", SHAPES_UP_TO_5, ids=str)
def test_trace_of_every_element_is_the_character(nu):
    rep = build_rep(nu, RepForm.SEMINORMAL)
    for sigma, mat in group_sweep(rep):
        assert mat_trace(mat) == character(nu, sigma.cycle_type())


def test_sweep_agrees_with_reduced_words():
    rep = build_rep((3, 1), RepForm.SEMINORMAL)
    count = 0
    for sigma, mat in group_sweep(rep):
        assert mat == rep_matrix(rep, sigma)
        count += 1
    assert count == 24


def test_rep_matrix_examples():
    rep = build_rep((2, 1), RepForm.SEMINORMAL)
    assert rep_matrix(rep, Permutation.identity(3)) == rep.identity()
    three_cycle = Permutation.from_cycles(3, [(1, 2, 3)])
    assert mat_trace(rep_matrix(rep, three_cycle)) == -1


def test_rep_matrix_rejects_wrong_degree():
    rep = build_rep((2, 1))
    with pytest.raises(ValueError):
        rep_matrix(rep, Permutation.identity(4))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_rep_matrix_is_a_homomorphism(n):
    rng = random.Random(100 + n)
    for nu in partitions_of(n):
        rep = build_rep(nu, RepForm.SEMINORMAL)
        for _ in range(100 // n):
            a, b = _random_perm(rng, n), _random_perm(rng, n)
            assert rep_matrix(rep, a * b) == rep_matrix(rep, a) * rep_matrix(rep, b)
            assert rep_matrix(rep, a) * rep_matrix(rep, a.inverse()) == rep.identity()


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_orthogonal_form_is_orthogonal(n):
    rng = random.Random(n)
    for nu in partitions_of(n):
        rep = build_rep(nu, RepForm.ORTHOGONAL)
        for g in rep.gens:
            assert np.max(np.abs(g @ g.T - np.eye(rep.dim))) < 1e-12
        for _ in range(10):
            m = rep_matrix(rep, _random_perm(rng, n))
            assert np.max(np.abs(m.T @ m - np.eye(rep.dim))) < 1e-10


@pytest.mark.parametrize("nu", [(3, 2), (2, 2, 1), (3, 1, 1), (4, 2)], ids=str)
def test_orthogonalizer_conjugates_seminormal_to_orthogonal(nu):
    semi = build_rep(nu, RepForm.SEMINORMAL)
    orth = build_rep(nu, RepForm.ORTHOGONAL)
    for gs, go in zip(semi.gens, orth.gens):
        assert np.max(np.abs(to_orthogonal(semi, gs) - go)) < 1e-12
    assert orthogonalizer(semi) is orthogonalizer(semi)


def test_orthogonalizer_needs_seminormal_form():
    with pytest.raises(ValueError):
        orthogonalizer(build_rep((2, 1), RepForm.ORTHOGONAL))


def test_sign_twist_generators():
    rep = build_rep((2, 1))
    tw = sign_twist(rep)
    assert tw.twisted and all(a == -b for a, b in zip(tw.gens, rep.gens))
    # twisted S^(2,1) has the character of S^(2,1)' = S^(2,1) times the sign
    for sigma, mat in group_sweep(tw):
        assert mat_trace(mat) == sigma.sign() * character((2, 1), sigma.cycle_type())


# ------------------------------------------------------------- α matrices

def test_alpha_on_sign_module():
    rep = build_rep((1, 1))
    assert alpha_matrix(rep, (1, 1), {1, 2}) == exact_matrix([[2]])


def test_alpha_rejects_wrong_subset_size():
    with pytest.raises(ValueError):
        alpha_matrix(build_rep((2, 1)), (2,), {1, 2, 3})


@pytest.mark.parametrize("nu", partitions_of(4) + partitions_of(5), ids=str)
def test_alpha_projections(nu):
    rep = build_rep(nu)
    n = rep.n
    for k in range(1, n + 1):
        for X in combinations(range(1, n + 1), k):
            total = rep.zero()
            for lam in partitions_of(k):
                c = projection_scale(lam)
                a = mat_scale(alpha_matrix(rep, lam, X), c)
                assert a * a == a, (lam, X)
                if not contains(nu, lam):
                    assert a == rep.zero()
                total = total + a
            assert total == rep.identity()


@pytest.mark.parametrize("nu", [nu for nu in SHAPES_UP_TO_5 if sum(nu) >= 3], ids=str)
def test_alpha_trace_two_ways(nu):
    rep = build_rep(nu)
    n = rep.n
    X = tuple(range(2, n + 1))
    for lam in partitions_of(n - 1):
        assert mat_trace(alpha_matrix(rep, lam, X)) == restricted_character_trace(rep, lam, X)


def test_json_export():
    doc = rep_to_json(build_rep((2, 1)))
    assert doc["gens"][1] == [["1/2", "1"], ["3/4", "-1/2"]]
    assert doc["form"] == "seminormal-exact" and doc["dim"] == 2
    assert matrix_to_json(fmpq_mat([[1, 2]])) == [["1", "2"]]


def test_form_parsing():
    assert RepForm.parse("orthogonal") is RepForm.ORTHOGONAL
    assert RepForm.parse("seminormal-exact") is RepForm.SEMINORMAL
    with pytest.raises(ValueError):
        RepForm.parse("young")
