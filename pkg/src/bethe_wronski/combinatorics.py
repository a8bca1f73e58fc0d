"""Partitions, tableau counts, symmetric-group characters and permutation streams."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Iterator, Optional, Sequence

from .scalars import exact_det


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))`` and both hash like the plain tuple ``(2, 1)``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, int):
            parts = (parts,)
        vals = [int(p) for p in parts]
        while vals and vals[-1] == 0:
            vals.pop()
        for a, b in zip(vals, vals[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {tuple(parts)}")
        if any(p < 0 for p in vals):
            raise ValueError(f"parts must be nonnegative: {tuple(parts)}")
        if any(p == 0 for p in vals):
            raise ValueError(f"zero part before a positive part: {tuple(parts)}")
        return super().__new__(cls, vals)

    def size(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """0-based part with implicit trailing zeros."""
        return self[i] if i < len(self) else 0

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")" if self else "()"


EMPTY = Partition()


def as_partition(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(p)


def partitions_of(k: int, max_length: Optional[int] = None,
                  inside: Optional[Sequence[int]] = None) -> list[Partition]:
    """All partitions of ``k`` in reverse-lexicographic order.

    Args:
        k: the size.
        max_length: keep partitions with at most this many parts.
        inside: keep partitions whose diagram fits inside this partition.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    box = as_partition(inside) if inside is not None else None
    limit = max_length if max_length is not None else k
    if box is not None:
        limit = min(limit, len(box))
    return [Partition(p) for p in _partitions_rec(k, k, limit, box, 0)]


def _partitions_rec(k: int, largest: int, slots: int, box, row: int):
    if k == 0:
        yield ()
        return
    if slots <= 0:
        return
    top = min(k, largest)
    if box is not None:
        top = min(top, box.part(row))
    for first in range(top, 0, -1):
        for rest in _partitions_rec(k - first, first, slots - 1, box, row + 1):
            yield (first,) + rest


def partitions_inside(box: Sequence[int]) -> list[Partition]:
    """Every partition contained in ``box``, ordered by size then reverse-lex."""
    box = as_partition(box)
    out: list[Partition] = []
    for k in range(box.size() + 1):
        out.extend(partitions_of(k, inside=box))
    return out


def conjugate(lam: Sequence[int]) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return EMPTY
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    outer, inner = as_partition(outer), as_partition(inner)
    return len(inner) <= len(outer) and all(inner[i] <= outer[i] for i in range(len(inner)))


@lru_cache(maxsize=None)
def _hook_count(lam: Partition) -> int:
    n = lam.size()
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(n) // hooks


@lru_cache(maxsize=None)
def _skew_count(lam: Partition, mu: Partition) -> int:
    size = lam.size() - mu.size()
    ell = len(lam)
    rows = []
    for i in range(ell):
        row = []
        for j in range(ell):
            k = lam.part(i) - i - mu.part(j) + j
            row.append(Fraction(1, math.factorial(k)) if k >= 0 else Fraction(0))
        rows.append(row)
    value = exact_det(rows) * math.factorial(size)
    if value.denominator != 1:
        raise ArithmeticError("skew tableau determinant is not integral")
    return int(value)


def num_syt(lam: Sequence[int], mu: Optional[Sequence[int]] = None) -> int:
    """Number of standard Young tableaux of shape ``lam / mu``.

    Straight shapes use the hook length product. Skew shapes use the
    determinant of ``1/(lam_i - i - mu_j + j)!`` in exact arithmetic.
    """
    lam = as_partition(lam)
    mu = as_partition(mu) if mu is not None else EMPTY
    if not contains(lam, mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    if not mu:
        return _hook_count(lam)
    if mu == lam:
        return 1
    return _skew_count(lam, mu)


def syt_ratio(lam: Sequence[int], mu: Optional[Sequence[int]] = None) -> Fraction:
    """``f^{lam/mu} / |lam/mu|!`` as an exact rational (zero unless mu ⊆ lam)."""
    lam = as_partition(lam)
    mu = as_partition(mu) if mu is not None else EMPTY
    if not contains(lam, mu):
        return Fraction(0)
    return Fraction(num_syt(lam, mu), math.factorial(lam.size() - mu.size()))


# ------------------------------------------------------------ characters

def _beta_set(lam: Partition, length: int) -> tuple[int, ...]:
    return tuple(lam.part(i) + length - 1 - i for i in range(length))


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    r = mu[0]
    rest = Partition(mu[1:])
    length = len(lam)
    beads = _beta_set(lam, length)
    occupied = set(beads)
    total = 0
    for b in beads:
        target = b - r
        if target < 0 or target in occupied:
            continue
        # border strip height = beads strictly between target and b
        height = sum(1 for c in beads if target < c < b)
        new = sorted((c if c != b else target for c in beads), reverse=True)
        shape = Partition(v - (length - 1 - i) for i, v in enumerate(new))
        total += (-1) ** height * _mn(shape, rest)
    return total


def character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Irreducible character value χ^lam on the class of cycle type ``mu``."""
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.size() != mu.size():
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _mn(lam, mu)


def class_size(mu: Sequence[int]) -> int:
    mu = as_partition(mu)
    return math.factorial(mu.size()) // centralizer_order(mu)


def centralizer_order(mu: Sequence[int]) -> int:
    """z_mu = prod_i i^{m_i} m_i!"""
    out = 1
    for part, mult in Counter(mu).items():
        out *= part ** mult * math.factorial(mult)
    return out


# ---------------------------------------------------------- permutations

class Permutation:
    """A bijection of {1..n} stored in one-line notation (1-based images).

    Composition follows ``(s * p)(i) = s(p(i))``.
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        imgs = tuple(int(v) for v in images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {imgs}")
        self.images = imgs
        self._hash = hash(imgs)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def _trusted(cls, imgs: tuple[int, ...]) -> "Permutation":
        obj = cls.__new__(cls)
        obj.images = imgs
        obj._hash = hash(imgs)
        return obj

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        imgs = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                imgs[a - 1] = b
        return cls(imgs)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return Permutation._trusted(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation._trusted(tuple(inv))

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def support(self) -> frozenset[int]:
        return frozenset(i for i, v in enumerate(self.images, start=1) if v != i)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = []
            i = start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self.images[i - 1]
            out.append(tuple(cyc))
        return out

    def cycle_type(self, within: Optional[Iterable[int]] = None) -> Partition:
        """Cycle type over [n], or over ``within`` (a set containing the support)."""
        lengths = [len(c) for c in self.cycles()]
        if within is None:
            return Partition(sorted(lengths, reverse=True))
        within = set(within)
        if not self.support() <= within:
            raise ValueError("support not contained in the given set")
        nontrivial = [k for k in lengths if k > 1]
        ones = len(within) - sum(nontrivial)
        return Partition(sorted(nontrivial, reverse=True) + [1] * ones)

    def sign(self) -> int:
        return (-1) ** sum(len(c) - 1 for c in self.cycles())

    def reduced_word(self) -> list[int]:
        """Indices i (1-based) with self = s_{w[0]} s_{w[1]} ... s_{w[-1]}.

        Adjacent transpositions s_i swap i and i+1; the word has length
        equal to the number of inversions.
        """
        arr = list(self.images)
        collected = []
        swapped = True
        while swapped:
            swapped = False
            for i in range(len(arr) - 1):
                if arr[i] > arr[i + 1]:
                    arr[i], arr[i + 1] = arr[i + 1], arr[i]
                    collected.append(i + 1)
                    swapped = True
        # each step right-multiplied by s_i, so the word is read backwards
        return collected[::-1]

    def to_json(self) -> list[int]:
        return list(self.images)


@dataclass(frozen=True)
class SupportedPermutation:
    """A pair (perm, support_set) with every moved point inside support_set."""

    perm: Permutation
    support_set: frozenset
    cycle_type: Partition


def _embed(n: int, subset: Sequence[int], arrangement: Sequence[int]) -> Permutation:
    imgs = list(range(1, n + 1))
    for src, dst in zip(subset, arrangement):
        imgs[src - 1] = dst
    return Permutation._trusted(tuple(imgs))


def supported_permutations(n: int, k: int) -> Iterator[SupportedPermutation]:
    """Stream every (σ, X) with |X| = k and σ a permutation of X.

    Cycle types count the fixed points inside X as parts equal to 1.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    for subset in combinations(range(1, n + 1), k):
        xs = frozenset(subset)
        for arrangement in permutations(subset):
            perm = _embed(n, subset, arrangement)
            yield SupportedPermutation(perm, xs, perm.cycle_type(within=xs))


def z_factorization_table(theta: Permutation, Z: Iterable[int]) -> Counter:
    """Tally of (cyc(σ_X), cyc(π_Y)) over all Z-factorizations of ``theta``.

    A Z-factorization is a pair (σ ∈ S_X, π ∈ S_Y) with X ∪ Y = [n],
    X ∩ Y = Z and σπ = θ. For each X ⊇ Z and σ ∈ S_X the partner π = σ⁻¹θ
    is determined, so the enumeration is over X and σ only.
    """
    n = theta.n
    Z = frozenset(Z)
    if not Z <= frozenset(range(1, n + 1)):
        raise ValueError("Z must be a subset of [n]")
    free = [i for i in range(1, n + 1) if i not in Z]
    table: Counter = Counter()
    for r in range(len(free) + 1):
        for extra in combinations(free, r):
            X = tuple(sorted(Z | set(extra)))
            Y = frozenset(free) - set(extra) | Z
            for arrangement in permutations(X):
                sigma = _embed(n, X, arrangement)
                pi = sigma.inverse() * theta
                if not pi.support() <= Y:
                    continue
                table[(sigma.cycle_type(within=X), pi.cycle_type(within=Y))] += 1
    return table


def count_z_factorizations(theta: Permutation, Z: Iterable[int],
                           lam: Sequence[int], mu: Sequence[int]) -> int:
    """Number of Z-factorizations (σ_X, π_Y) of θ with cycle types (lam, mu)."""
    table = z_factorization_table(theta, Z)
    return table.get((as_partition(lam), as_partition(mu)), 0)


def all_permutations(n: int) -> Iterator[Permutation]:
    for imgs in permutations(range(1, n + 1)):
        yield Permutation._trusted(imgs)


def sjt_sequence(n: int) -> Iterator[tuple[Permutation, Optional[int]]]:
    """Steinhaus–Johnson–Trotter sweep of S_n.

    Yields ``(perm, i)`` where ``perm = previous * s_i`` (positions i, i+1 of
    the one-line form swapped); the first item has ``i = None``.
    """
    arr = list(range(1, n + 1))
    direction = [-1] * n  # indexed by value - 1
    yield Permutation._trusted(tuple(arr)), None
    while True:
        mobile, pos = -1, -1
        for idx, v in enumerate(arr):
            j = idx + direction[v - 1]
            if 0 <= j < n and arr[j] < v and v > mobile:
                mobile, pos = v, idx
        if mobile < 0:
            return
        j = pos + direction[mobile - 1]
        arr[pos], arr[j] = arr[j], arr[pos]
        for v in range(mobile + 1, n + 1):
            direction[v - 1] *= -1
        yield Permutation._trusted(tuple(arr)), min(pos, j) + 1
