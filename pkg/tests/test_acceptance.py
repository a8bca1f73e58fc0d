"""Numbered acceptance criteria.

Run with ``pytest tests/test_acceptance.py`` (or execute this file); the
terminal summary prints one PASS/FAIL line per criterion.
"""

import random
import sys
import time
from fractions import Fraction
from functools import lru_cache

import numpy as np
import pytest

from bethe_wronski.bethe import (ZParams, beta_family, eval_beta, inversion_report, plucker_sweep,
                                 random_z, star_duality_report, trial_points, verify_identities)
from bethe_wronski.combinatorics import (Partition, Permutation, count_z_factorizations, num_syt,
                                         partitions_of, z_factorization_table)
from bethe_wronski.grassmann import (PolyVector, echelon_basis, h_basis, plucker_relations,
                                     pluckers_from_basis, positivity_check, single_row_polys)
from bethe_wronski.scalars import exact_matrix, mat_trace
from bethe_wronski.solver import (count_solutions_repeated, partial_wronskians, scalar_solution,
                                  schubert_projection, solve_inverse_wronski)
from bethe_wronski.specht import build_rep
from bethe_wronski.symfunc import bethe_dimension

from itertools import combinations, permutations, product

F = Fraction
acceptance = pytest.mark.acceptance


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed <= self.seconds, f"took {self.elapsed:.1f}s, budget {self.seconds}s"


def _mono(poly):
    out = list(poly.monomial())
    while out and out[-1] == 0:
        out.pop()
    return out


# ------------------------------------------------------------ criterion 1

@acceptance(1, "worked examples reproduced exactly")
def test_worked_examples_exact():
    with Budget(1.0):
        z1, z2 = F(2), F(3)
        z = ZParams([z1, z2])
        # operators on both modules
        two, one_one = build_rep((2,)), build_rep((1, 1))
        expected = {
            (2,): {(): z1 * z2, (1,): z1 + z2, (2,): 2, (1, 1): 0},
            (1, 1): {(): z1 * z2, (1,): z1 + z2, (2,): 0, (1, 1): 2},
        }
        for rep in (two, one_one):
            fam = beta_family(rep, z)
            for lam, val in expected[tuple(rep.nu)].items():
                assert eval_beta(fam[Partition(lam)], 0) == exact_matrix([[val]])
        # both solutions
        first, second = scalar_solution((2,), z), scalar_solution((1, 1), z)
        assert [first[lam] for lam in [(), (1,), (2,), (1, 1)]] == [6, 5, 2, 0]
        assert [second[lam] for lam in [(), (1,), (2,), (1, 1)]] == [6, 5, 0, 2]
        # minors of a spanning set
        span = [PolyVector([1]), PolyVector.from_monomial([0, z1 * z2, (z1 + z2) / 2, F(1, 3)])]
        assert pluckers_from_basis(span) == first
        # echelon basis
        f1, f2 = echelon_basis(first, 2)
        assert _mono(f1) == [1] and _mono(f2) == [0, z1 * z2 / 2, (z1 + z2) / 4, F(1, 6)]
        # h-basis at several base points
        for t in (F(-1), F(1, 2), F(5)):
            s = [t, F(1)]
            s2 = [t * t, 2 * t, F(1)]
            s3 = [t ** 3, 3 * t * t, 3 * t, F(1)]
            a, b = (z1 - t) * (z2 - t), (z1 + z2 - 2 * t) / 2
            h, dh = h_basis(single_row_polys(first), 2, 4, t, [z1, z2])
            assert _mono(h) == [a * s[0] + b * s2[0] + s3[0] / 3, a + b * s2[1] + s3[1] / 3,
                                b + s3[2] / 3, F(1, 3)]
            assert _mono(dh) == [a]
            h, dh = h_basis(single_row_polys(second), 2, 4, t, [z1, z2])
            assert _mono(h) == [a * s[0] + b * s2[0], a + b * s2[1], b]
            assert _mono(dh) == [a - s2[0], -s2[1], -1]


# ------------------------------------------------------------ criterion 2

@acceptance(2, "two-by-two example invariants at z = (1,2,3,4)")
def test_two_two_invariants():
    with Budget(1.0):
        z = ZParams([1, 2, 3, 4])
        rep = build_rep((2, 2))
        fam = beta_family(rep, z)
        b = {lam: eval_beta(op, 0) for lam, op in fam.items()}
        eye = rep.identity()
        assert b[Partition(())] == eye * 24
        assert b[Partition((1,))] == eye * 50
        assert b[Partition((2, 1))] == eye * 30
        assert b[Partition((2, 2))] == eye * 12
        # diagonal sums of the stated 2x2 matrices at (1,2,3,4)
        z1, z2, z3, z4 = 1, 2, 3, 4
        tr2 = (2 * z1 * z2 + z1 * z4 + z2 * z3 + 2 * z3 * z4) + (2 * z1 * z3 + z1 * z4 + z2 * z3 + 2 * z2 * z4)
        tr11 = (2 * z1 * z3 + z1 * z4 + z2 * z3 + 2 * z2 * z4) + (2 * z1 * z2 + z1 * z4 + z2 * z3 + 2 * z3 * z4)
        assert mat_trace(b[Partition((2,))]) == tr2 == 70
        assert mat_trace(b[Partition((1, 1))]) == tr11 == 70
        rel = (-b[Partition(())] * b[Partition((2, 2))] + b[Partition((1,))] * b[Partition((2, 1))]
               - b[Partition((1, 1))] * b[Partition((2,))])
        assert rel == rep.zero()


# ------------------------------------------------------------ criterion 3

@acceptance(3, "identity suite exact for n <= 5 and sampled for n = 6")
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_identity_suite_small(n):
    with Budget(120):
        for seed in range(3):
            z, pts = random_z(seed, n), trial_points(seed, 3)
            for nu in partitions_of(n):
                rep = build_rep(nu)
                for which in ("commutativity", "translation", "plucker-all"):
                    report = verify_identities(rep, z, which, pts)
                    assert report.passed, (nu, which, report.failures[:3])
                    if which == "plucker-all" and n == 1:
                        # a projective line carries no quadratic relations at all
                        assert report.details["relations"] == 0
                    else:
                        assert report.checked > 0, (nu, which)


@acceptance(3, "identity suite exact for n <= 5 and sampled for n = 6")
@pytest.mark.slow
def test_identity_suite_six():
    with Budget(600):
        reps = [build_rep(nu) for nu in partitions_of(6)]
        for seed in range(3):
            z, pts = random_z(seed, 6), trial_points(seed, 3)
            for rep in reps:
                for which in ("commutativity", "translation"):
                    assert verify_identities(rep, z, which, pts).passed, (rep.nu, which)
            for family in ("single-column", "single-row"):
                reports = plucker_sweep(reps, z, pts, plucker_relations(6, 12, family))
                assert all(r.passed for r in reports), family
            # every relation that has a term supported on sizes <= 6
            reports = plucker_sweep(reps, z, pts, plucker_relations(6, 12, "all", max_size=6))
            assert all(r.passed for r in reports)
        # the whole deduplicated family of Gr(6, 12), streamed once
        z, pts = random_z(0, 6), trial_points(0, 3)
        reports = plucker_sweep(reps, z, pts, plucker_relations(6, 12, "all"))
        assert all(r.passed for r in reports)
        assert reports[0].details["relations"] >= 10_000


# ------------------------------------------------------- criteria 4 and 8

def _draw(seed, n, zero=False):
    rng = random.Random(1000 * n + seed)
    vals = rng.sample(range(1, 97), n)
    z = [F(v, 97) for v in vals]
    if zero:
        z[rng.randrange(n)] = F(0)
    return tuple(z)


@lru_cache(maxsize=None)
def _solutions(n, zero):
    out = []
    for seed in range(5):
        z = _draw(seed, n, zero)
        for nu in partitions_of(n):
            out.append((nu, z, solve_inverse_wronski(nu, z)))
    return out


@acceptance(4, "inverse Wronski end to end with positivity")
@pytest.mark.parametrize("n", [4, 5])
def test_inverse_wronski_end_to_end(n):
    with Budget(120):
        for nu, z, sols in _solutions(n, False):
            assert len(sols) == num_syt(nu), (nu, z)
            for s in sols:
                assert s.multiplicity == 1
                assert s.residuals["imag"] <= 1e-9
                assert s.residuals["wronskian"] <= 1e-8 and s.residuals["relations"] <= 1e-8
                verdict = positivity_check(s.delta, "tp-in-cell", 1e-9)
                assert verdict.ok, (nu, z, verdict.witness)
        for nu, z, sols in _solutions(n, True):
            assert sum(s.multiplicity for s in sols) == num_syt(nu)
            for s in sols:
                assert s.residuals["wronskian"] <= 1e-8 and s.residuals["relations"] <= 1e-8
                verdict = positivity_check(s.delta, "tnn", 1e-9)
                assert verdict.ok, (nu, z, verdict.witness)


@acceptance(8, "partial Wronskians of the echelon basis are nonnegative")
@pytest.mark.parametrize("n", [4, 5])
def test_markov_basis(n):
    for zero in (False, True):
        for nu, z, sols in _solutions(n, zero):
            for s in sols:
                basis = echelon_basis(s.delta, max(len(nu), 1))
                for w in partial_wronskians(basis):
                    assert min(np.real(c) for c in w) >= -1e-9, (nu, z)


# ------------------------------------------------------------ criterion 5

@acceptance(5, "repeated roots: cluster counts and projections")
@pytest.mark.parametrize("kappa", [(2, 1, 1), (2, 2), (3, 1), (4,)], ids=str)
def test_repeated_roots(kappa):
    with Budget(60):
        zs = [F(1), F(5, 2), F(4)][:len(kappa)]
        total = 0
        for nu in partitions_of(4):
            report = count_solutions_repeated(nu, kappa, zs)
            assert report.consistent, report.to_json()
            assert report.total_clusters == bethe_dimension(nu, kappa)
            for info in report.per_mu.values():
                assert all(dim == info["dim_M"] for dim in info["cluster_dims"])
            total += report.total_clusters
            rep = build_rep(nu)
            for mus in product(*[partitions_of(k) for k in kappa]):
                P = schubert_projection(rep, mus, zs)
                diff = P * P - P
                assert max(abs(float(diff[i, j])) for i in range(rep.dim) for j in range(rep.dim)) <= 1e-9
        assert total == bethe_dimension(None, kappa)
        assert total == {(2, 1, 1): 10, (2, 2): 10, (3, 1): 7, (4,): 5}[kappa]


# ------------------------------------------------------------ criterion 6

@acceptance(6, "sign-twist duality and rectangular inversion")
def test_duality_and_inversion():
    with Budget(30):
        for n in range(1, 6):
            z = random_z(n, n)
            for nu in partitions_of(n):
                report = star_duality_report(nu, z)
                assert report.passed and report.checked > 0, (nu, report.failures[:3])
        report = inversion_report(build_rep((2, 2)), ZParams([1, 2, 3, 5]))
        assert report.passed and report.checked > 0


# ------------------------------------------------------------ criterion 7

def _check_symmetry(theta, Z, n):
    table = z_factorization_table(theta, Z)
    shapes = [lam for k in range(n + 1) for lam in partitions_of(k)]
    for lam in shapes:
        for mu in shapes:
            assert table.get((lam, mu), 0) == table.get((mu, lam), 0), (theta, Z, lam, mu)
    # the public counting function reads the same tally
    lam, mu = next(iter(table))
    assert count_z_factorizations(theta, Z, mu, lam) == count_z_factorizations(theta, Z, lam, mu) \
        == table[(lam, mu)]


@acceptance(7, "Z-factorization count symmetry")
def test_z_factorization_symmetry():
    with Budget(120):
        for n in range(1, 5):
            for images in permutations(range(1, n + 1)):
                theta = Permutation(images)
                for r in range(n + 1):
                    for Z in combinations(range(1, n + 1), r):
                        _check_symmetry(theta, Z, n)
        rng = random.Random(2024)
        for n in (5, 6):
            for _ in range(500):
                images = list(range(1, n + 1))
                rng.shuffle(images)
                Z = [i for i in range(1, n + 1) if rng.random() < 0.5]
                _check_symmetry(Permutation(images), Z, n)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
