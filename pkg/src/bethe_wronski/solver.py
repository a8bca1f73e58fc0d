"""Inverse Wronski solving by simultaneous diagonalization on S^ν.

The operators β^{1^k}_ℓ commute, and for real parameters they are symmetric
in the orthogonal tableau basis. One random combination of them is
diagonalized; its eigenvalue clusters are the joint eigenspaces E, and the
scalar by which β^λ_ν acts on E is the Plücker coordinate Δ^λ of the
corresponding solution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Any, Optional, Sequence

import numpy as np

from .bethe import ZParams, beta_family, eval_beta, relation_family
from .combinatorics import Partition, as_partition, num_syt, partitions_inside, partitions_of
from .grassmann import (PluckerVector, echelon_basis, eval_relations, h_basis,
                        poly_add, poly_derivative, poly_from_roots, poly_mul,
                        single_row_polys, translated_polys, wronskian_from_pluckers,
                        wronskian_of_polys)
from .scalars import (format_scalar, mat_is_zero, mat_mul, mat_scale, mat_trace,
                      to_float_matrix, to_fraction)
from .specht import RepForm, SpechtRep, build_rep, orthogonalizer, to_orthogonal
from .symfunc import bethe_dimension, hall_product_coefficient


class SolverError(RuntimeError):
    """Raised when no random combination yields consistent eigen-clusters."""


@dataclass
class SolveConfig:
    """Solver knobs.

    ``mode`` is ``exact-build+float-solve`` (rational construction, then a
    float eigensolve) or ``float`` (construction in floating point, required
    for complex parameters). ``complex_tol`` replaces ``residual_tol`` for
    the consistency checks on the non-Hermitian path.
    """

    seed: int = 0
    cluster_tol: float = 1e-7
    residual_tol: float = 1e-8
    max_retries: int = 5
    mode: str = "exact-build+float-solve"
    complex_tol: float = 1e-6

    def __post_init__(self):
        if self.cluster_tol <= 0 or self.residual_tol <= 0 or self.complex_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.mode not in ("exact-build+float-solve", "float"):
            raise ValueError(f"unknown solve mode {self.mode!r}")


@dataclass
class Solution:
    delta: PluckerVector
    multiplicity: int
    eigenvectors: np.ndarray
    residuals: dict = field(default_factory=dict)

    def to_json(self, with_vectors: bool = True) -> dict:
        doc = {
            "delta": self.delta.to_json(),
            "multiplicity": self.multiplicity,
            "residuals": {k: format_scalar(v) for k, v in sorted(self.residuals.items())},
        }
        if with_vectors:
            doc["eigenvectors"] = [[format_scalar(_clean(x)) for x in row]
                                   for row in np.asarray(self.eigenvectors).T.tolist()]
        return doc


def _clean(x):
    if isinstance(x, complex) and x.imag == 0:
        return x.real
    return x


@dataclass
class ResidualReport:
    wronskian: Any
    relations: Any
    tol: float

    @property
    def passed(self) -> bool:
        return abs(self.wronskian) <= self.tol and abs(self.relations) <= self.tol

    def to_json(self) -> dict:
        return {"wronskian": format_scalar(self.wronskian),
                "relations": format_scalar(self.relations), "passed": self.passed}


# ------------------------------------------------------------- building

@dataclass
class _FloatModel:
    """Orthogonal-basis float matrices of the Bethe family on S^ν."""

    nu: Partition
    dim: int
    generators: list
    values: dict  # λ ⊆ ν -> β^λ_ν at t = 0
    seminormal_scale: Optional[np.ndarray]  # diagonal conjugating back, if exact-built


def _float_model(nu: Partition, z: ZParams, cfg: SolveConfig) -> _FloatModel:
    if cfg.mode == "exact-build+float-solve" and z.exact:
        rep = build_rep(nu, RepForm.SEMINORMAL)
        scale = orthogonalizer(rep)

        def conv(mat):
            return to_orthogonal(rep, mat)
    else:
        rep = build_rep(nu, RepForm.ORTHOGONAL)
        scale = None

        def conv(mat):
            return np.asarray(mat)
    fam = beta_family(rep, z)
    n = nu.size()
    gens = []
    for k in range(n + 1):
        op = fam[Partition([1] * k)]
        if not op.is_zero:
            gens.extend(conv(c) for c in op.coeffs)
    values = {lam: conv(eval_beta(fam[lam], 0)) for lam in partitions_inside(nu)}
    return _FloatModel(nu, rep.dim, gens, values, scale)


# ------------------------------------------------------------ clustering

def _clusters_real(w: np.ndarray, tol: float) -> list[list[int]]:
    order = np.argsort(w)
    diameter = float(w[order[-1]] - w[order[0]]) if len(w) else 0.0
    cut = tol * diameter
    groups = [[int(order[0])]]
    for prev, cur in zip(order, order[1:]):
        if w[cur] - w[prev] > cut:
            groups.append([int(cur)])
        else:
            groups[-1].append(int(cur))
    return groups


def _clusters_complex(w: np.ndarray, tol: float) -> list[list[int]]:
    diameter = max((abs(a - b) for a in w for b in w), default=0.0)
    cut = tol * diameter
    parent = list(range(len(w)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            if abs(w[i] - w[j]) <= cut:
                parent[find(i)] = find(j)
    groups: dict = {}
    for i in range(len(w)):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values(), key=lambda g: (w[g[0]].real, w[g[0]].imag))


def _smallest_relative_gap(w: np.ndarray) -> float:
    if len(w) < 2:
        return float("inf")
    vals = np.sort_complex(np.asarray(w, dtype=complex))
    diameter = max(abs(a - b) for a in vals for b in vals) or 1.0
    gaps = [abs(a - b) for i, a in enumerate(vals) for b in vals[i + 1:]]
    return float(min(gaps) / diameter)


def _scalar_residual(mat: np.ndarray, basis: np.ndarray, left: np.ndarray) -> tuple[Any, float]:
    """Average eigenvalue of ``mat`` on span(basis) and the invariance residual."""
    comp = left @ mat @ basis
    r = basis.shape[1]
    theta = np.trace(comp) / r
    resid = np.max(np.abs(mat @ basis - theta * basis)) if mat.size else 0.0
    scale = max(1.0, float(np.max(np.abs(mat)))) if mat.size else 1.0
    return theta, float(resid) / scale


def _generalized_eigenspace(a: np.ndarray, theta: complex, r: int) -> np.ndarray:
    shifted = np.linalg.matrix_power(a - theta * np.eye(a.shape[0]), r)
    _, _, vh = np.linalg.svd(shifted)
    return vh[-r:].conj().T


# --------------------------------------------------------------- solving

def solve_inverse_wronski(nu: Sequence[int], z, cfg: Optional[SolveConfig] = None) -> list[Solution]:
    """Every point V with Wr(V) = Π(u + z_i) in the Schubert cell of ν.

    Returns one Solution per joint eigenspace; multiplicities add up to f^ν.
    """
    cfg = cfg or SolveConfig()
    nu = as_partition(nu)
    z = z if isinstance(z, ZParams) else ZParams(z)
    n = nu.size()
    if z.n != n:
        raise ValueError(f"|nu| = {n} but {z.n} parameters were given")
    if n == 0:
        raise ValueError("nu must be nonempty")
    model = _float_model(nu, z, cfg)
    hermitian = z.real
    rng = np.random.default_rng(cfg.seed)
    sizes = [float(np.max(np.abs(g))) for g in model.generators]
    floor = 1e-9 * max(sizes, default=0.0)
    gens = [g / s for g, s in zip(model.generators, sizes) if s > floor]
    tol = cfg.residual_tol if hermitian else cfg.complex_tol
    target = Fraction(math.factorial(n), num_syt(nu))
    last_gap = None

    for _attempt in range(cfg.max_retries + 1):
        coefs = rng.standard_normal(len(gens))
        raw = sum(c * g for c, g in zip(coefs, gens))
        combo = raw
        if hermitian:
            combo = (raw + raw.T) / 2
            w, vecs = np.linalg.eigh(combo)
            groups = _clusters_real(w, cfg.cluster_tol)
            spaces = [(vecs[:, g], vecs[:, g].T) for g in groups]
        else:
            w, _ = np.linalg.eig(combo)
            groups = _clusters_complex(w, cfg.cluster_tol)
            spaces = []
            for g in groups:
                basis = _generalized_eigenspace(combo, complex(np.mean(w[g])), len(g))
                spaces.append((basis, np.linalg.pinv(basis)))
        last_gap = _smallest_relative_gap(w)
        solutions = []
        consistent = True
        for basis, left in spaces:
            coords = {}
            worst = 0.0
            for lam, mat in model.values.items():
                theta, resid = _scalar_residual(mat, basis, left)
                coords[lam] = theta
                worst = max(worst, resid)
            for g in gens:
                worst = max(worst, _scalar_residual(g, basis, left)[1])
            if worst > tol:
                consistent = False
                break
            top = coords[nu]
            if abs(top - float(target)) > 1e-6 * float(target):
                raise SolverError(
                    f"top coordinate {top} differs from |nu|!/f^nu = {target}; construction is inconsistent")
            imag = max(abs(complex(v).imag) for v in coords.values())
            entries = {}
            for lam, v in coords.items():
                v = complex(v) * (float(target) / complex(top))
                entries[lam] = v.real if hermitian else (v if v.imag != 0 else v.real)
            entries[nu] = float(target)
            delta = PluckerVector(nu, entries, "float")
            sol = Solution(delta, basis.shape[1], basis, {"eigen": worst, "imag": imag})
            solutions.append(sol)
        if not consistent:
            continue
        if hermitian and model.seminormal_scale is not None:
            # the same combination in the non-symmetric seminormal basis
            d = model.seminormal_scale
            ev = np.linalg.eigvals((raw / d[:, None]) * d[None, :])
            spread = max(1.0, float(np.max(np.abs(ev))))
            imag = float(np.max(np.abs(ev.imag))) / spread
            for sol in solutions:
                sol.residuals["imag"] = max(sol.residuals["imag"], imag)
        for sol in solutions:
            rep = verify_solution(sol, nu, z, cfg.residual_tol)
            sol.residuals["wronskian"] = rep.wronskian
            sol.residuals["relations"] = rep.relations
        solutions.sort(key=lambda s: tuple(_sort_key(s.delta[lam]) for lam in partitions_inside(nu)))
        return solutions
    raise SolverError(
        f"no consistent clustering after {cfg.max_retries + 1} attempts at cluster_tol="
        f"{cfg.cluster_tol}; smallest relative spectral gap {last_gap:.3e}")


def scalar_solution(nu: Sequence[int], z) -> PluckerVector:
    """Exact Plücker vector when every β^λ_ν(0) is a scalar matrix.

    This covers one-dimensional modules and equal parameters. Raises
    ValueError if some operator is not scalar.
    """
    nu = as_partition(nu)
    z = z if isinstance(z, ZParams) else ZParams(z)
    if not z.exact:
        raise ValueError("scalar_solution needs rational parameters")
    rep = build_rep(nu, RepForm.SEMINORMAL)
    fam = beta_family(rep, z)
    entries = {}
    for lam in partitions_inside(nu):
        mat = eval_beta(fam[lam], 0)
        value = mat[0, 0]
        if mat != rep.identity() * value:
            raise ValueError(f"β^{lam} is not scalar on S^{nu}")
        entries[lam] = to_fraction(value)
    return PluckerVector(nu, entries, "exact")


def _sort_key(v):
    v = complex(v)
    return (round(v.real, 9), round(v.imag, 9))


def verify_solution(sol: Solution, nu: Sequence[int], z, tol: float = 1e-8,
                    full: bool = False) -> ResidualReport:
    """Wronskian and Plücker-relation residuals of a solution.

    The relation residual uses the single-column and single-row families of
    Gr(n, 2n) (all relations when ``full``). Exact vectors give exact values.
    """
    nu = as_partition(nu)
    z = z if isinstance(z, ZParams) else ZParams(z)
    delta = sol.delta if isinstance(sol, Solution) else sol
    n = nu.size()
    wr = wronskian_from_pluckers(delta)
    g = poly_from_roots(list(z.values))
    wres = max(abs(a - b) for a, b in zip(wr, g))
    if full:
        rels = relation_family(n, 2 * n, "all")
    else:
        rels = relation_family(n, 2 * n, "single-column") + relation_family(n, 2 * n, "single-row")
    rres = eval_relations(delta, rels)
    return ResidualReport(wres, rres, tol)


def differential_operator_residual(delta: PluckerVector) -> Any:
    """Apply Σ_k (-1)^k Δ^{1^k}(u) ∂_u^{n-k} to the echelon basis of V in Gr(n, 2n).

    Δ^{1^k}(u) is the eigenvalue polynomial of β^{1^k}(u); every basis vector
    must be annihilated. Returns the largest absolute coefficient.
    """
    n = delta.n
    basis = echelon_basis(delta, n)
    coeff_polys = [translated_polys(delta, [1] * k) for k in range(n + 1)]
    worst = 0
    for f in basis:
        mono = f.monomial()
        derivs = [mono]
        for _ in range(n):
            derivs.append(poly_derivative(derivs[-1]))
        total: list = [0]
        for k in range(n + 1):
            term = poly_mul(coeff_polys[k], derivs[n - k])
            total = poly_add(total, term if k % 2 == 0 else [-c for c in term])
        worst = max([worst] + [abs(c) for c in total])
    return worst


def default_base_point(z) -> Fraction:
    """An integer strictly below every real part of z, so never equal to a z_i."""
    z = z if isinstance(z, ZParams) else ZParams(z)
    return Fraction(math.floor(min(complex(v).real for v in z.values)) - 1)


def solution_bases(sol, nu: Sequence[int], z, t=None, d: Optional[int] = None) -> dict:
    """Echelon basis and h-basis of a solution, each with its monic Wronskian.

    ``t`` defaults to :func:`default_base_point`.
    """
    nu = as_partition(nu)
    z = z if isinstance(z, ZParams) else ZParams(z)
    delta = sol.delta if isinstance(sol, Solution) else sol
    d = d or max(len(nu), 1)
    t = default_base_point(z) if t is None else t
    ech = echelon_basis(delta, d)
    m = nu.part(0) + d
    hb = h_basis(single_row_polys(delta), d, m, t, list(z.values))
    return {"t": t, "d": d, "m": m, "echelon": ech, "h": hb,
            "wronskian_echelon": wronskian_of_polys(ech, monic=True),
            "wronskian_h": wronskian_of_polys(hb, monic=True)}


def partial_wronskians(basis: Sequence) -> list[list]:
    """Wr(f_1), Wr(f_1, f_2), ..., Wr(f_1..f_d) as coefficient lists."""
    return [wronskian_of_polys(basis[:i]) for i in range(1, len(basis) + 1)]


# ------------------------------------------------------- repeated roots

def _expand(z_distinct: Sequence, kappa: Sequence[int]) -> list:
    out = []
    for v, k in zip(z_distinct, kappa):
        out.extend([v] * int(k))
    return out


def schubert_projection(rep: SpechtRep, mu_list: Sequence[Sequence[int]], z_distinct: Sequence):
    """Idempotent multiple of Π_i β^{μ_i}_ν(-z_i) with z repeated |μ_i| times.

    The product is computed with the parameters (z_1^{κ_1}, ..., z_s^{κ_s}),
    κ_i = |μ_i|, and rescaled by trace(P)/trace(P²). A zero product (some
    μ_i not fitting) is returned as the zero matrix.
    """
    mus = [as_partition(m) for m in mu_list]
    if len(mus) != len(z_distinct):
        raise ValueError("one parameter per partition is required")
    if len(set(ZParams(z_distinct).values)) != len(z_distinct):
        raise ValueError("z_distinct has repeated entries")
    kappa = [m.size() for m in mus]
    if sum(kappa) != rep.n:
        raise ValueError("partition sizes must add up to n")
    zs = ZParams(z_distinct).values
    fam = beta_family(rep, ZParams(_expand(zs, kappa)))
    prod = rep.identity()
    for mu, v in zip(mus, zs):
        prod = mat_mul(prod, eval_beta(fam[mu], -v))
    if mat_is_zero(prod):
        return prod
    tr1 = mat_trace(prod)
    tr2 = mat_trace(mat_mul(prod, prod))
    return mat_scale(prod, tr1 / tr2)


@dataclass
class RepeatedRootCount:
    nu: Partition
    kappa: tuple
    per_mu: dict  # μ-tuple -> {"count", "cluster_dims", "dim_M", "predicted"}
    total_clusters: int
    predicted_total: int
    unclassified: int

    @property
    def consistent(self) -> bool:
        if self.unclassified or self.total_clusters != self.predicted_total:
            return False
        for info in self.per_mu.values():
            if info["count"] != info["predicted"]:
                return False
            if any(dim % info["dim_M"] for dim in info["cluster_dims"]):
                return False
        return True

    def to_json(self) -> dict:
        return {
            "nu": list(self.nu),
            "kappa": list(self.kappa),
            "total_clusters": self.total_clusters,
            "predicted_total": self.predicted_total,
            "unclassified": self.unclassified,
            "per_mu": [
                {"mu": [list(m) for m in key], **info} for key, info in self.per_mu.items()
            ],
            "consistent": self.consistent,
        }


def count_solutions_repeated(nu: Sequence[int], kappa: Sequence[int], z_distinct: Sequence,
                             cfg: Optional[SolveConfig] = None) -> RepeatedRootCount:
    """Solve with repeated parameters and sort clusters by Schubert projections."""
    cfg = cfg or SolveConfig()
    nu = as_partition(nu)
    kappa = tuple(int(k) for k in kappa)
    if len(kappa) != len(z_distinct):
        raise ValueError("kappa and z_distinct must have the same length")
    zvals = list(ZParams(z_distinct).values)
    sols = solve_inverse_wronski(nu, _expand(zvals, kappa), cfg)
    exact = all(isinstance(v, Fraction) for v in zvals)
    rep = build_rep(nu, RepForm.SEMINORMAL if exact else RepForm.ORTHOGONAL)
    per_mu: dict = {}
    projections = {}
    for mus in product(*[partitions_of(k) for k in kappa]):
        P = schubert_projection(rep, mus, zvals)
        if mat_is_zero(P):
            continue
        projections[mus] = to_orthogonal(rep, P) if exact else to_float_matrix(P)
        dim_m = 1
        for mu in mus:
            dim_m *= num_syt(mu)
        per_mu[mus] = {"count": 0, "cluster_dims": [], "dim_M": dim_m,
                       "predicted": hall_product_coefficient(nu, mus)}
    unclassified = 0
    for sol in sols:
        Q = np.real_if_close(sol.eigenvectors)
        hits = [mus for mus, P in projections.items()
                if np.max(np.abs(P @ Q - Q)) <= 1e-6 * max(1.0, float(np.max(np.abs(P))))]
        if len(hits) != 1:
            unclassified += 1
            continue
        info = per_mu[hits[0]]
        info["count"] += 1
        info["cluster_dims"].append(sol.multiplicity)
    return RepeatedRootCount(nu, kappa, per_mu, len(sols), bethe_dimension(nu, kappa), unclassified)
