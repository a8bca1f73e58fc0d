"""Homogeneous symmetric functions in the Schur and power-sum bases."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping, Optional, Sequence

from .combinatorics import (Partition, as_partition, centralizer_order, character,
                            num_syt, partitions_of)

BASES = ("schur", "powersum")


@dataclass
class SymFunc:
    """Σ coeffs[λ] b_λ over partitions λ of ``degree`` in basis ``basis``."""

    degree: int
    coeffs: dict = field(default_factory=dict)
    basis: str = "schur"

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for lam, c in self.coeffs.items():
            lam = as_partition(lam)
            if lam.size() != self.degree:
                raise ValueError(f"{lam} does not have size {self.degree}")
            c = Fraction(c)
            if c:
                clean[lam] = clean.get(lam, Fraction(0)) + c
        self.coeffs = {k: v for k, v in clean.items() if v}

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.degree != other.degree:
            return not self.coeffs and not other.coeffs
        if self.basis != other.basis:
            other = convert_basis(other, self.basis)
        return self.coeffs == other.coeffs

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if self.degree != other.degree:
            raise ValueError("only homogeneous sums are supported")
        other = convert_basis(other, self.basis)
        merged = dict(self.coeffs)
        for k, v in other.coeffs.items():
            merged[k] = merged.get(k, Fraction(0)) + v
        return SymFunc(self.degree, merged, self.basis)

    def scaled(self, c) -> "SymFunc":
        return SymFunc(self.degree, {k: v * Fraction(c) for k, v in self.coeffs.items()}, self.basis)


def schur(lam: Sequence[int]) -> SymFunc:
    lam = as_partition(lam)
    return SymFunc(lam.size(), {lam: 1}, "schur")


def power_sum(mu: Sequence[int]) -> SymFunc:
    mu = as_partition(mu)
    return SymFunc(mu.size(), {mu: 1}, "powersum")


def convert_basis(f: SymFunc, target: str) -> SymFunc:
    """Change basis with s_λ = Σ_μ (χ^λ_μ / z_μ) p_μ and p_μ = Σ_λ χ^λ_μ s_λ."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target:
        return SymFunc(f.degree, dict(f.coeffs), target)
    out: dict = {}
    parts = partitions_of(f.degree)
    if f.basis == "schur":
        for lam, c in f.coeffs.items():
            for mu in parts:
                chi = character(lam, mu)
                if chi:
                    out[mu] = out.get(mu, Fraction(0)) + c * Fraction(chi, centralizer_order(mu))
    else:
        for mu, c in f.coeffs.items():
            for lam in parts:
                chi = character(lam, mu)
                if chi:
                    out[lam] = out.get(lam, Fraction(0)) + c * chi
    return SymFunc(f.degree, out, target)


def exp_specialization(f: SymFunc) -> list[Fraction]:
    """Image under p_1 ↦ u, p_k ↦ 0 (k ≥ 2), as coefficients of u^0..u^degree."""
    out = [Fraction(0)] * (f.degree + 1)
    if f.basis == "powersum":
        out[f.degree] = f.coeffs.get(Partition([1] * f.degree), Fraction(0))
    else:
        out[f.degree] = sum((c * Fraction(num_syt(lam), math.factorial(f.degree))
                             for lam, c in f.coeffs.items()), Fraction(0))
    return out


def exp_specialization_series(schur_coeffs: Mapping) -> list:
    """Exponential specialization of an inhomogeneous Schur expansion Σ c_λ s_λ."""
    degree = max((as_partition(lam).size() for lam in schur_coeffs), default=0)
    out: list = [0] * (degree + 1)
    for lam, c in schur_coeffs.items():
        lam = as_partition(lam)
        out[lam.size()] += c * Fraction(num_syt(lam), math.factorial(lam.size()))
    return out


# ------------------------------------------------------ inner products

@lru_cache(maxsize=None)
def _full_row_sum(k: int, rho: Partition) -> int:
    """Σ_{λ ⊢ k} χ^λ_ρ, the character of S_k on Σ_λ S^λ."""
    return sum(character(lam, rho) for lam in partitions_of(k))


def _merge(parts: Iterable[Partition]) -> Partition:
    return Partition(sorted((p for part in parts for p in part), reverse=True))


def _class_sum(nu: Partition, sizes: Sequence[int], weight) -> Fraction:
    """Σ over class tuples (ρ_i ⊢ sizes_i) of Π weight(i, ρ_i)/z_{ρ_i} · χ^ν(∪ρ_i)."""
    total = Fraction(0)
    choices = [partitions_of(k) for k in sizes]
    for rhos in product(*choices):
        w = Fraction(1)
        for i, rho in enumerate(rhos):
            v = weight(i, rho)
            if not v:
                w = Fraction(0)
                break
            w *= Fraction(v, centralizer_order(rho))
        if w:
            total += w * character(nu, _merge(rhos))
    return total


def hall_product_coefficient(nu: Sequence[int], mus: Sequence[Sequence[int]]) -> int:
    """⟨s_ν, s_{μ_1} ··· s_{μ_s}⟩ (a Littlewood–Richardson number) by characters."""
    nu = as_partition(nu)
    mus = [as_partition(m) for m in mus]
    if sum(m.size() for m in mus) != nu.size():
        raise ValueError("sizes do not add up")
    val = _class_sum(nu, [m.size() for m in mus], lambda i, rho: character(mus[i], rho))
    if val.denominator != 1:
        raise ArithmeticError("non-integral inner product")
    return int(val)


def bethe_dimension(nu: Optional[Sequence[int]], kappa: Sequence[int]) -> int:
    """⟨s_ν, S_{κ_1} ··· S_{κ_s}⟩ with S_k = Σ_{λ ⊢ k} s_λ.

    Without ``nu`` the sum over all ν ⊢ |κ| is returned.
    """
    kappa = [int(k) for k in kappa]
    if any(k <= 0 for k in kappa):
        raise ValueError("composition parts must be positive")
    n = sum(kappa)
    if nu is None:
        return sum(bethe_dimension(v, kappa) for v in partitions_of(n))
    nu = as_partition(nu)
    if nu.size() != n:
        raise ValueError(f"|nu| = {nu.size()} but the composition sums to {n}")
    val = _class_sum(nu, kappa, lambda i, rho: _full_row_sum(kappa[i], rho))
    if val.denominator != 1:
        raise ArithmeticError("non-integral inner product")
    return int(val)


def bethe_dimension_table(kappa: Sequence[int]) -> dict[Partition, int]:
    n = sum(int(k) for k in kappa)
    return {nu: bethe_dimension(nu, kappa) for nu in partitions_of(n)}


def compositions(n: int) -> list[tuple[int, ...]]:
    """All compositions of n (ordered tuples of positive integers)."""
    if n == 0:
        return [()]
    out = []
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            out.append((first,) + rest)
    return out
