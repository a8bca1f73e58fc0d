"""Matrix models of Specht modules and of the class-function sums α^λ_X.

Basis vectors are standard Young tableaux of shape ν, sorted
lexicographically by their row-reading word (rows bottom to top, each left to
right). For the adjacent transposition s_i = (i, i+1) and a tableau T, let
``a = 1 / (c_T(i+1) - c_T(i))`` with ``c`` the content (column minus row).

* seminormal form (exact): ``s_i T = a T + b T'`` where T' swaps i and i+1,
  with ``b = 1 - a²`` when ``a > 0`` and ``b = 1`` when ``a < 0``;
* orthogonal form (float): the same with ``b = sqrt(1 - a²)`` on both sides.

When T' is not standard, i and i+1 share a row (``a = 1``) or a column
(``a = -1``) and T is an eigenvector.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Iterator, Sequence

import numpy as np
from flint import fmpq, fmpq_mat

from .combinatorics import (Partition, Permutation, as_partition, character,
                            sjt_sequence, syt_ratio)
from .scalars import (mat_identity, mat_mul, mat_scale, mat_zeros_like,
                      matrix_to_json, to_float_matrix)


class RepForm(str, Enum):
    SEMINORMAL = "seminormal-exact"
    ORTHOGONAL = "orthogonal-float"

    @classmethod
    def parse(cls, value) -> "RepForm":
        if isinstance(value, RepForm):
            return value
        text = str(value).lower()
        for form in cls:
            if text in (form.value, form.value.split("-")[0]):
                return form
        raise ValueError(f"unknown representation form {value!r}")


Tableau = tuple[tuple[int, ...], ...]


def standard_tableaux(nu: Sequence[int]) -> list[Tableau]:
    """All standard Young tableaux of shape ``nu`` in row-reading-word order."""
    nu = as_partition(nu)
    n = nu.size()
    found: list[Tableau] = []

    def grow(rows: list[list[int]], k: int) -> None:
        if k > n:
            found.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(nu)):
            if len(rows[i]) < nu[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                grow(rows, k + 1)
                rows[i].pop()

    grow([[] for _ in nu], 1)
    found.sort(key=reading_word)
    return found


def reading_word(tab: Tableau) -> tuple[int, ...]:
    return tuple(v for row in reversed(tab) for v in row)


def _axial(pos: dict[int, tuple[int, int]], i: int) -> int:
    (r1, c1), (r2, c2) = pos[i], pos[i + 1]
    return (c2 - r2) - (c1 - r1)




def _positions(tab: Tableau) -> dict[int, tuple[int, int]]:
    return {v: (r, c) for r, row in enumerate(tab) for c, v in enumerate(row)}


def _swap(tab: Tableau, i: int) -> Tableau:
    def f(v: int) -> int:
        return i + 1 if v == i else i if v == i + 1 else v
    return tuple(tuple(f(v) for v in row) for row in tab)


@dataclass(eq=False)
class SpechtRep:
    """Images of s_1..s_{n-1} on S^ν in a fixed tableau basis."""

    nu: Partition
    n: int
    dim: int
    gens: list
    form: RepForm
    tableaux: list[Tableau]
    twisted: bool = False
    _cache: dict = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def exact(self) -> bool:
        return self.form is RepForm.SEMINORMAL

    def identity(self):
        return mat_identity(self.dim, self.exact)

    def zero(self):
        return mat_zeros_like(self.identity())

    def memo(self, key, builder):
        """Per-rep memo table; ``builder`` runs at most once per key."""
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        value = builder()
        with self._lock:
            return self._cache.setdefault(key, value)


def build_rep(nu: Sequence[int], form=RepForm.SEMINORMAL) -> SpechtRep:
    nu = as_partition(nu)
    form = RepForm.parse(form)
    n = nu.size()
    if n < 1:
        raise ValueError("need |nu| >= 1")
    tabs = standard_tableaux(nu)
    index = {t: k for k, t in enumerate(tabs)}
    dim = len(tabs)
    gens = []
    for i in range(1, n):
        exact = form is RepForm.SEMINORMAL
        mat = fmpq_mat(dim, dim) if exact else np.zeros((dim, dim))
        for col, tab in enumerate(tabs):
            pos = _positions(tab)
            axial = _axial(pos, i)
            if exact:
                a = fmpq(1, axial)
                mat[col, col] = a
            else:
                a = 1.0 / axial
                mat[col, col] = a
            if abs(axial) == 1:
                continue
            row = index[_swap(tab, i)]
            if exact:
                mat[row, col] = 1 - a * a if axial > 0 else fmpq(1)
            else:
                mat[row, col] = math.sqrt(1.0 - a * a)
        gens.append(mat)
    return SpechtRep(nu=nu, n=n, dim=dim, gens=gens, form=form, tableaux=tabs)


def sign_twist(rep: SpechtRep) -> SpechtRep:
    """The representation σ ↦ sgn(σ)ρ(σ), on the same basis (isomorphic to S^{ν'})."""
    gens = [mat_scale(g, -1) for g in rep.gens]
    return SpechtRep(nu=rep.nu, n=rep.n, dim=rep.dim, gens=gens, form=rep.form,
                     tableaux=rep.tableaux, twisted=not rep.twisted)


def rep_matrix(rep: SpechtRep, sigma: Permutation):
    """ρ(σ) as the product of generator images along a reduced word."""
    if sigma.n != rep.n:
        raise ValueError("permutation degree does not match the representation")
    out = rep.identity()
    for i in sigma.reduced_word():
        out = mat_mul(out, rep.gens[i - 1])
    return out


def group_sweep(rep: SpechtRep) -> Iterator[tuple[Permutation, object]]:
    """Yield (σ, ρ(σ)) for every σ ∈ S_n, one matrix product per step."""
    current = rep.identity()
    for perm, i in sjt_sequence(rep.n):
        if i is not None:
            current = mat_mul(current, rep.gens[i - 1])
        yield perm, current


def orthogonalizer(rep: SpechtRep) -> np.ndarray:
    """Diagonal d with ``d * S * d^{-1}`` orthogonal for every seminormal generator S.

    Returned as the vector of diagonal entries.
    """
    if rep.form is not RepForm.SEMINORMAL:
        raise ValueError("orthogonalizer needs the seminormal form")

    def build():
        d = [None] * rep.dim
        d[0] = 1.0
        index = {t: k for k, t in enumerate(rep.tableaux)}
        stack = [0]
        while stack:
            col = stack.pop()
            tab = rep.tableaux[col]
            pos = _positions(tab)
            for i in range(1, rep.n):
                axial = _axial(pos, i)
                if abs(axial) == 1:
                    continue
                other = index[_swap(tab, i)]
                if d[other] is not None:
                    continue
                b = math.sqrt(1.0 - 1.0 / axial ** 2)
                # seminormal entries: 1 - a² below the a > 0 tableau, 1 below the other
                d[other] = d[col] / b if axial > 0 else d[col] * b
                stack.append(other)
        return np.array(d, dtype=float)

    return rep.memo("orthogonalizer", build)


def to_orthogonal(rep: SpechtRep, mat) -> np.ndarray:
    """Convert a seminormal-basis matrix to the orthogonal basis (float)."""
    d = orthogonalizer(rep)
    m = to_float_matrix(mat, dtype=complex if np.iscomplexobj(mat) else float)
    return (d[:, None] * m) / d[None, :]


def alpha_matrix(rep: SpechtRep, lam: Sequence[int], X: Iterable[int]):
    """Σ_{σ ∈ S_X} χ^lam(cyc σ_X) ρ(σ)."""
    lam = as_partition(lam)
    X = tuple(sorted(set(X)))
    if len(X) != lam.size():
        raise ValueError("|X| must equal |lam|")
    if any(not 1 <= x <= rep.n for x in X):
        raise ValueError("X must be a subset of [n]")
    total = rep.zero()
    for arrangement in permutations(X):
        imgs = list(range(1, rep.n + 1))
        for src, dst in zip(X, arrangement):
            imgs[src - 1] = dst
        sigma = Permutation(imgs)
        chi = character(lam, sigma.cycle_type(within=X))
        if chi:
            total = total + mat_scale(rep_matrix(rep, sigma), chi)
    return total


def projection_scale(lam: Sequence[int]) -> Fraction:
    """f^λ/|λ|!, the factor turning α^λ_X into an idempotent."""
    return syt_ratio(lam)


def restricted_character_trace(rep: SpechtRep, lam: Sequence[int], X: Iterable[int]) -> int:
    """Trace of α^λ_X via characters only: Σ_σ χ^λ(σ_X) χ^ν(σ)."""
    lam = as_partition(lam)
    X = tuple(sorted(set(X)))
    total = 0
    for arrangement in permutations(X):
        imgs = list(range(1, rep.n + 1))
        for src, dst in zip(X, arrangement):
            imgs[src - 1] = dst
        sigma = Permutation(imgs)
        total += character(lam, sigma.cycle_type(within=X)) * character(rep.nu, sigma.cycle_type())
    return total


def rep_to_json(rep: SpechtRep) -> dict:
    return {
        "nu": list(rep.nu),
        "form": rep.form.value,
        "dim": rep.dim,
        "tableaux": [[list(r) for r in t] for t in rep.tableaux],
        "gens": [matrix_to_json(g) for g in rep.gens],
    }


__all__ = [
    "RepForm", "SpechtRep", "build_rep", "sign_twist", "rep_matrix", "group_sweep", "alpha_matrix",
    "standard_tableaux", "orthogonalizer", "to_orthogonal", "projection_scale",
    "restricted_character_trace", "rep_to_json",
]
