"""Plücker coordinates of spaces of polynomials.

A d-dimensional space V of polynomials of degree < m is written in the basis
``e_j(u) = u^{j-1}/(j-1)!`` (j = 1..m). A d-subset I = (i_1 < ... < i_d) of
[m] labels the partition ``(i_d - d, ..., i_1 - 1)``, and Δ^λ(V) is the
d × d minor on the corresponding columns of a matrix whose rows span V.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from itertools import combinations
from typing import Any, Iterable, Iterator, Mapping, Optional, Sequence

import numpy as np

from .combinatorics import (EMPTY, Partition, as_partition, conjugate, contains,
                            num_syt, partitions_inside, partitions_of, syt_ratio)
from .scalars import exact_det, format_scalar, is_exact, parse_scalar

# ------------------------------------------------------- small polynomials
# Polynomials in u are coefficient lists, lowest degree first.


def poly_trim(p: list) -> list:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return [0]
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_add(a: Sequence, b: Sequence) -> list:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] += y
    return out


def poly_scale(a: Sequence, c) -> list:
    return [c * x for x in a]


def poly_derivative(a: Sequence) -> list:
    return [i * a[i] for i in range(1, len(a))] or [0]


def poly_eval(a: Sequence, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_from_roots(z: Sequence) -> list:
    """Coefficients of Π (u + z_i)."""
    out: list = [Fraction(1) if all(is_exact(v) for v in z) else 1.0]
    for v in z:
        out = poly_mul(out, [v, 1])
    return out


# ------------------------------------------------------- index conversion

@lru_cache(maxsize=None)
def _index_partition(I: tuple[int, ...], d: int) -> Partition:
    return Partition(I[d - 1 - q] - (d - q) for q in range(d))


def index_set_to_partition(I: Sequence[int], d: int) -> Partition:
    if len(I) != d:
        raise ValueError("index set has the wrong size")
    return _index_partition(tuple(I), d)


def partition_to_index_set(lam: Sequence[int], d: int) -> tuple[int, ...]:
    lam = as_partition(lam)
    if len(lam) > d:
        raise ValueError(f"{lam} has more than {d} parts")
    return tuple(lam.part(d - r) + r for r in range(1, d + 1))


def _sort_with_sign(seq: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the sorting permutation (0 when an entry repeats) and the sorted tuple."""
    if len(set(seq)) != len(seq):
        return 0, tuple(sorted(seq))
    inversions = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return (-1) ** inversions, tuple(sorted(seq))


# ------------------------------------------------------------- relations

@dataclass(frozen=True)
class PluckerRelation:
    """Σ sign · Δ^A Δ^B = 0, generated from an (I, J) index pair of Gr(d, m).

    ``terms`` keeps the factor order of the generating expression
    Σ_k Δ_{I-k} Δ_{J+k}, listed by decreasing k.
    """

    d: int
    m: int
    I: tuple[int, ...]
    J: tuple[int, ...]
    terms: tuple[tuple[int, Partition, Partition], ...]

    def degree_ok(self) -> bool:
        sizes = {a.size() + b.size() for _, a, b in self.terms}
        return len(sizes) <= 1

    def to_json(self) -> dict:
        return {
            "I": list(self.I),
            "J": list(self.J),
            "terms": [{"sign": s, "first": list(a), "second": list(b)} for s, a, b in self.terms],
        }

    def __str__(self) -> str:
        parts = []
        for s, a, b in self.terms:
            parts.append(f"{'+' if s > 0 else '-'} D{a}*D{b}")
        return " ".join(parts)


def relation_terms(I: Sequence[int], J: Sequence[int], d: int) -> list[tuple[int, Partition, Partition]]:
    """Nonzero terms of Σ_k Δ_{I-k} Δ_{J+k}, by decreasing k."""
    out = []
    jset = set(J)
    for s, k in enumerate(I):
        if k in jset:
            continue
        first = tuple(v for v in I if v != k)
        sign_first = (-1) ** (d - s)  # moving k from slot s+1 to the end
        sign_second, second = _sort_with_sign(tuple(J) + (k,))
        out.append((k, sign_first * sign_second,
                    index_set_to_partition(first, d), index_set_to_partition(second, d)))
    out.sort(key=lambda item: -item[0])
    return [(s, a, b) for _, s, a, b in out]


def _canonical_key(terms) -> Optional[tuple]:
    tally: Counter = Counter()
    for s, a, b in terms:
        tally[(a, b) if a <= b else (b, a)] += s
    items = sorted((k, v) for k, v in tally.items() if v != 0)
    if not items:
        return None
    if items[0][1] < 0:
        items = [(k, -v) for k, v in items]
    return tuple(items)


def _small_index_sets(d: int, m: int, max_size: int) -> list[tuple[int, ...]]:
    out = []
    for k in range(max_size + 1):
        for lam in partitions_inside_box(k, d, m - d):
            out.append(partition_to_index_set(lam, d))
    return out


def partitions_inside_box(k: int, rows: int, cols: int) -> list[Partition]:
    return partitions_of(k, inside=Partition([cols] * rows)) if rows and cols else (
        [EMPTY] if k == 0 else [])


def plucker_relations(d: int, m: int, family: str = "all",
                      max_size: Optional[int] = None,
                      dedupe: bool = True) -> Iterator[PluckerRelation]:
    """Quadratic Plücker relations of Gr(d, m), deduplicated.

    Args:
        family: ``all``, ``single-column`` (I = 1..d+1) or ``single-row``
            (J = 1..d-1).
        max_size: when given, keep only relations with at least one term whose
            two partitions both have size <= max_size. Every other relation
            vanishes identically on data supported on partitions of size
            <= max_size, so the restriction is lossless for such data and
            avoids enumerating the whole index range.
        dedupe: when False, every (I, J) pair with a surviving term is
            emitted, duplicates included.

    Relations are generated in lexicographic (I, J) order. Two relations are
    the same when their terms agree after treating Δ^A Δ^B as commutative,
    combining like terms and fixing the overall sign; the first generated
    representative is kept. Relations whose terms all cancel are dropped.
    """
    if not 1 <= d <= m:
        raise ValueError("need 1 <= d <= m")
    if family not in ("all", "single-column", "single-row"):
        raise ValueError(f"unknown relation family {family!r}")
    universe = range(1, m + 1)
    if family == "single-column":
        I_choices: Iterable = [tuple(range(1, d + 2))] if d + 1 <= m else []
    else:
        I_choices = combinations(universe, d + 1)
    if family == "single-row":
        J_choices: list = [tuple(range(1, d))]
    else:
        J_choices = list(combinations(universe, d - 1))

    if max_size is not None:
        small = _small_index_sets(d, m, max_size)
        I_ok = {tuple(sorted(K + (i,))) for K in small for i in universe if i not in K}
        J_ok = {tuple(v for v in L if v != k) for L in small for k in L}
        I_choices = [I for I in I_choices if I in I_ok]
        J_choices = [J for J in J_choices if J in J_ok]

    seen: set = set()
    for I in I_choices:
        for J in J_choices:
            terms = relation_terms(I, J, d)
            if max_size is not None and not any(
                    a.size() <= max_size and b.size() <= max_size for _, a, b in terms):
                continue
            key = _canonical_key(terms)
            if key is None or (dedupe and key in seen):
                continue
            seen.add(key)
            yield PluckerRelation(d, m, tuple(I), tuple(J), tuple(terms))


# ---------------------------------------------------------- data classes

@dataclass
class PluckerVector:
    """Plücker coordinates of a point in the Schubert cell of ``nu``.

    ``entries`` holds Δ^λ for λ ⊆ ν; every other coordinate is zero. The
    normalization is Δ^ν = |ν|!/f^ν. ``mode`` is ``exact`` (Fraction values)
    or ``float`` (float or complex values).

    JSON form::

        {"nu": [2, 2], "mode": "exact",
         "entries": [{"lam": [], "value": "24"}, {"lam": [1], "value": "50"}, ...]}
    """

    nu: Partition
    entries: dict
    mode: str = "exact"

    def __post_init__(self):
        self.nu = as_partition(self.nu)
        self.entries = {as_partition(k): v for k, v in self.entries.items()}
        if self.mode not in ("exact", "float"):
            raise ValueError("mode must be 'exact' or 'float'")

    def __getitem__(self, lam) -> Any:
        lam = as_partition(lam)
        if not contains(self.nu, lam):
            return Fraction(0) if self.mode == "exact" else 0.0
        return self.entries.get(lam, Fraction(0) if self.mode == "exact" else 0.0)

    @property
    def n(self) -> int:
        return self.nu.size()

    def normalization(self) -> Fraction:
        return Fraction(math.factorial(self.n), num_syt(self.nu))

    def is_normalized(self, tol: float = 0.0) -> bool:
        target = self.normalization()
        val = self[self.nu]
        if self.mode == "exact":
            return val == target
        return abs(val - float(target)) <= tol * float(target)

    def support(self) -> list[Partition]:
        return partitions_inside(self.nu)

    def values(self) -> list:
        return [self[lam] for lam in self.support()]

    @classmethod
    def from_raw(cls, nu, raw: Mapping, mode: Optional[str] = None) -> "PluckerVector":
        """Scale arbitrary coordinates so that the ν-entry is |ν|!/f^ν."""
        nu = as_partition(nu)
        raw = {as_partition(k): v for k, v in raw.items()}
        if mode is None:
            mode = "exact" if all(is_exact(v) for v in raw.values()) else "float"
        top = raw.get(nu, 0)
        if top == 0:
            raise ValueError(f"coordinate Δ^{nu} vanishes; not in the cell of {nu}")
        target = Fraction(math.factorial(nu.size()), num_syt(nu))
        scale = (target / Fraction(top)) if mode == "exact" else float(target) / top
        entries = {lam: (Fraction(raw.get(lam, 0)) * scale if mode == "exact" else raw.get(lam, 0) * scale)
                   for lam in partitions_inside(nu)}
        entries[nu] = target if mode == "exact" else float(target)
        return cls(nu, entries, mode)

    def to_json(self) -> dict:
        return {
            "nu": list(self.nu),
            "entries": [{"lam": list(lam), "value": format_scalar(self[lam])} for lam in self.support()],
            "mode": self.mode,
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "PluckerVector":
        try:
            nu = as_partition(doc["nu"])
            mode = doc.get("mode", "exact")
            entries = {}
            for item in doc["entries"]:
                val = parse_scalar(item["value"])
                if mode == "float":
                    val = val if isinstance(val, complex) else float(val)
                entries[as_partition(item["lam"])] = val
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed Plücker vector: {exc}") from exc
        return cls(nu, entries, mode)


@dataclass(frozen=True)
class PolyVector:
    """A polynomial written in the basis e_j(u) = u^{j-1}/(j-1)!.

    ``coeffs[j-1]`` multiplies e_j; JSON form ``{"coeffs_e_basis": [...]}``
    with scalar strings.
    """

    coeffs: tuple

    def __init__(self, coeffs: Iterable):
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def length(self) -> int:
        return len(self.coeffs)

    def monomial(self) -> list:
        """Coefficients in the monomials u^0, u^1, ..."""
        out = []
        for j, c in enumerate(self.coeffs):
            out.append(c / math.factorial(j) if not is_exact(c) else Fraction(c) / math.factorial(j))
        return out

    @classmethod
    def from_monomial(cls, coeffs: Sequence) -> "PolyVector":
        return cls(c * math.factorial(j) for j, c in enumerate(coeffs))

    def padded(self, m: int) -> "PolyVector":
        if len(self.coeffs) > m and any(c != 0 for c in self.coeffs[m:]):
            raise ValueError("polynomial does not fit")
        zero = 0 if not self.coeffs else self.coeffs[0] * 0
        return PolyVector(list(self.coeffs[:m]) + [zero] * (m - len(self.coeffs)))

    def integrate(self) -> "PolyVector":
        """Antiderivative vanishing at 0 (shifts e_j to e_{j+1})."""
        zero = self.coeffs[0] * 0 if self.coeffs else 0
        return PolyVector([zero] + list(self.coeffs))

    def to_json(self) -> dict:
        return {"coeffs_e_basis": [format_scalar(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, doc: Mapping) -> "PolyVector":
        return cls(parse_scalar(v) for v in doc["coeffs_e_basis"])


# ----------------------------------------------------------- operations

def _is_exact_vector(delta: PluckerVector) -> bool:
    return delta.mode == "exact"


def eval_relations(delta: PluckerVector, relations: Iterable[PluckerRelation],
                   normalize: Optional[bool] = None):
    """Largest |relation value| on ``delta``.

    Exact vectors give an exact rational. Float vectors are divided by
    ``‖Δ‖²`` (Euclidean norm over the support) unless ``normalize`` is False.
    """
    worst = Fraction(0) if _is_exact_vector(delta) else 0.0
    for rel in relations:
        val = 0
        for s, a, b in rel.terms:
            x = delta[a]
            if x == 0:
                continue
            y = delta[b]
            if y == 0:
                continue
            val += s * x * y
        worst = max(worst, abs(val))
    if not _is_exact_vector(delta) and normalize is not False:
        norm2 = sum(abs(v) ** 2 for v in delta.values())
        worst = worst / norm2 if norm2 else worst
    return worst


def wronskian_from_pluckers(delta: PluckerVector) -> list:
    """Σ_{λ⊆ν} (f^λ/|λ|!) Δ^λ u^{|λ|}, lowest degree first."""
    coeffs: list = [0] * (delta.n + 1)
    for lam in delta.support():
        coeffs[lam.size()] += syt_ratio(lam) * delta[lam]
    if _is_exact_vector(delta):
        coeffs = [Fraction(c) for c in coeffs]
    return coeffs


def translate_pluckers(delta: PluckerVector, t) -> PluckerVector:
    """Coordinates of V(u + t): Δ^μ ↦ Σ_{λ⊇μ} (f^{λ/μ}/|λ/μ|!) Δ^λ t^{|λ/μ|}."""
    mode = delta.mode if is_exact(t) else "float"
    sup = delta.support()
    out = {}
    for mu in sup:
        acc = 0
        for lam in sup:
            if lam.size() >= mu.size() and contains(lam, mu):
                acc += syt_ratio(lam, mu) * delta[lam] * t ** (lam.size() - mu.size())
        out[mu] = Fraction(acc) if mode == "exact" else acc
    return PluckerVector(delta.nu, out, mode)


def translated_polys(delta: PluckerVector, lam: Sequence[int]) -> list:
    """Coefficients in t (lowest first) of the Δ^lam coordinate of V(u + t)."""
    lam = as_partition(lam)
    coeffs: list = [0] * (max(delta.n - lam.size(), 0) + 1)
    for big in delta.support():
        if big.size() >= lam.size() and contains(big, lam):
            coeffs[big.size() - lam.size()] += syt_ratio(big, lam) * delta[big]
    if delta.mode == "exact":
        coeffs = [Fraction(c) for c in coeffs]
    return coeffs


def single_row_polys(delta: PluckerVector) -> dict[int, list]:
    """For k = 0..n, the coefficients in t of Δ^{(k)} of the translate by t."""
    return {k: translated_polys(delta, [k] if k else []) for k in range(delta.n + 1)}


def all_minors(rows: Sequence[Sequence[Any]]) -> dict[tuple[int, ...], Any]:
    """Every maximal minor of a d × m matrix, keyed by 1-based column set."""
    d = len(rows)
    m = len(rows[0]) if rows else 0
    exact = all(is_exact(v) for row in rows for v in row)
    out = {}
    for cols in combinations(range(m), d):
        sub = [[row[c] for c in cols] for row in rows]
        if exact:
            out[tuple(c + 1 for c in cols)] = exact_det(sub)
        else:
            out[tuple(c + 1 for c in cols)] = complex(np.linalg.det(np.array(sub, dtype=complex))) \
                if any(isinstance(v, complex) for row in sub for v in row) else float(np.linalg.det(np.array(sub, dtype=float)))
    return out


def infer_cell(raw: Mapping[Partition, Any], tol: float = 0.0) -> Partition:
    nonzero = [lam for lam, v in raw.items() if abs(v) > tol]
    if not nonzero:
        raise ValueError("all Plücker coordinates vanish")
    top = max(nonzero, key=lambda lam: (lam.size(), lam))
    if not all(contains(top, lam) for lam in nonzero):
        raise ValueError("nonzero coordinates have no largest partition; not in a single cell")
    return top


def pluckers_from_basis(polys: Sequence[PolyVector], nu: Optional[Sequence[int]] = None,
                        tol: float = 1e-12) -> PluckerVector:
    """Normalized Plücker coordinates of span(polys).

    Raises ValueError for rank-deficient input and for spans with a nonzero
    coordinate outside the closed cell of ``nu``.
    """
    if not polys:
        raise ValueError("need at least one polynomial")
    d = len(polys)
    m = max(p.length for p in polys)
    rows = [list(p.padded(m).coeffs) for p in polys]
    minors = all_minors(rows)
    exact = all(is_exact(v) for row in rows for v in row)
    raw = {index_set_to_partition(I, d): v for I, v in minors.items()}
    scale = max((abs(v) for v in raw.values()), default=0)
    if scale == 0:
        raise ValueError("polynomials are linearly dependent")
    cut = 0 if exact else tol * scale
    cell = infer_cell(raw, cut) if nu is None else as_partition(nu)
    for lam, v in raw.items():
        if abs(v) > cut and not contains(cell, lam):
            raise ValueError(f"coordinate Δ^{lam} is nonzero outside the cell of {cell}")
    return PluckerVector.from_raw(cell, {lam: v for lam, v in raw.items() if contains(cell, lam)},
                                  "exact" if exact else "float")


def _coord_by_index(delta: PluckerVector, I: Sequence[int], d: int):
    sign, srt = _sort_with_sign(tuple(I))
    if sign == 0 or srt[0] < 1:
        return 0
    return sign * delta[index_set_to_partition(srt, d)]


def echelon_basis(delta: PluckerVector, d: int) -> list[PolyVector]:
    """Reduced row-echelon basis f_1..f_d of the space with coordinates ``delta``.

    With J = (ν_d + 1, ..., ν_1 + d), the leading term of f_i is e_{j_i} and
    f_i has zero coefficient on e_j for the other j ∈ J.
    """
    nu = delta.nu
    if d < len(nu):
        raise ValueError("d must be at least the number of parts of nu")
    if not delta.is_normalized(1e-9):
        raise ValueError("Plücker vector is not normalized")
    J = partition_to_index_set(nu, d)
    scale = Fraction(num_syt(nu), math.factorial(nu.size()))
    if delta.mode != "exact":
        scale = float(scale)
    basis = []
    for s, j in enumerate(J):
        rest = tuple(v for v in J if v != j)
        sign = (-1) ** (d - 1 - s)
        coeffs = [sign * scale * _coord_by_index(delta, rest + (k,), d) for k in range(1, j + 1)]
        basis.append(PolyVector(coeffs))
    m = nu.part(0) + d
    return [b.padded(m) for b in basis]


def _bivariate_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for (i1, j1), x in a.items():
        for (i2, j2), y in b.items():
            key = (i1 + i2, j1 + j2)
            out[key] = out.get(key, 0) + x * y
    return out


def h_basis(single_row_evals: Mapping[int, Sequence], d: int, m: int, t,
            z: Sequence) -> list[PolyVector]:
    """Basis built from single-row eigenvalue polynomials at a base point t.

    ``single_row_evals[k]`` lists the coefficients (lowest degree first) of
    the polynomial s ↦ Δ^{(k)}(s). The first vector is
    h(u) = Σ_{k=d}^{m} Δ^{(k-d)}(-t) (u+t)^{k-1}/(k-1)!, the others are its
    t-derivatives of order 1..d-1, all evaluated at the given t.
    """
    zs = list(z)
    if any(t == v for v in zs):
        raise ValueError("base point t coincides with a root parameter z_i")
    # h as a polynomial in (u, t): keys (power of u, power of t)
    h: dict = {}
    for k in range(d, m + 1):
        coeffs = single_row_evals.get(k - d)
        if coeffs is None:
            continue
        beta = {(0, j): c * (-1) ** j for j, c in enumerate(coeffs) if c != 0}
        kk = k - 1
        shift = {(a, kk - a): Fraction(math.comb(kk, a), math.factorial(kk)) for a in range(kk + 1)}
        for key, val in _bivariate_mul(beta, shift).items():
            h[key] = h.get(key, 0) + val
    out = []
    current = h
    for _ in range(d):
        poly = [0] * m
        for (a, b), c in current.items():
            if a < m:
                poly[a] += c * t ** b
            elif c * t ** b != 0:
                raise ValueError("polynomial degree exceeds m - 1")
        out.append(PolyVector.from_monomial(poly))
        current = {(a, b - 1): c * b for (a, b), c in current.items() if b > 0}
    return out


def dual_pluckers(delta: PluckerVector) -> PluckerVector:
    """Re-index by conjugate partitions; the cell becomes ν'."""
    return PluckerVector(conjugate(delta.nu),
                         {conjugate(lam): delta[lam] for lam in delta.support()}, delta.mode)


@dataclass
class PositivityVerdict:
    ok: bool
    mode: str
    witness: Optional[Partition] = None
    value: Any = None

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "ok": self.ok,
            "witness": None if self.witness is None else list(self.witness),
            "value": None if self.value is None else format_scalar(self.value),
        }


def positivity_check(delta: PluckerVector, mode: str = "tnn", tol: float = 0.0) -> PositivityVerdict:
    """Total nonnegativity (``tnn``) or total positivity in the cell (``tp-in-cell``).

    Coordinates outside the cell are zero by construction of PluckerVector,
    so only the entries λ ⊆ ν are inspected, smallest partitions first.
    """
    if mode not in ("tnn", "tp-in-cell"):
        raise ValueError(f"unknown positivity mode {mode!r}")
    for lam in delta.support():
        v = delta[lam]
        if isinstance(v, complex):
            if abs(v.imag) > tol:
                return PositivityVerdict(False, mode, lam, v)
            v = v.real
        bad = v < -tol if mode == "tnn" else v <= tol
        if bad:
            return PositivityVerdict(False, mode, lam, v)
    return PositivityVerdict(True, mode)


def _poly_det(mat: list[list[list]], absolute: bool = False) -> list:
    """Determinant of a square matrix of polynomials by expansion along rows.

    With ``absolute`` every entry is replaced by its coefficientwise absolute
    value and all signs are taken positive, which bounds the size of the
    terms that cancel in each coefficient.
    """
    size = len(mat)
    memo: dict = {}

    def minor(row: int, cols: tuple[int, ...]) -> list:
        if row == size:
            return [1]
        key = (row, cols)
        if key in memo:
            return memo[key]
        acc: list = [0]
        for pos, c in enumerate(cols):
            entry = mat[row][c]
            if all(x == 0 for x in entry):
                continue
            if absolute:
                entry = [abs(x) for x in entry]
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            term = poly_mul(entry, sub)
            acc = poly_add(acc, term if pos % 2 == 0 or absolute else poly_scale(term, -1))
        memo[key] = acc
        return acc

    return minor(0, tuple(range(size)))


def _reduce_float_basis(polys: Sequence[PolyVector]) -> tuple[list[PolyVector], Any]:
    """Reduced echelon form (highest degree first) with partial pivoting.

    Returns the reduced rows, kept in the original order, and the factor c
    with Wr(polys) = c * Wr(reduced).
    """
    m = max(p.length for p in polys)
    cplx = any(isinstance(c, complex) for p in polys for c in p.coeffs)
    R = np.array([list(p.padded(m).coeffs) for p in polys], dtype=complex if cplx else float)
    d = R.shape[0]
    scale = float(np.max(np.abs(R))) if R.size else 0.0
    factor = 1.0
    free = list(range(d))
    for col in range(m - 1, -1, -1):
        if not free:
            break
        row = max(free, key=lambda r: abs(R[r, col]))
        piv = R[row, col]
        if abs(piv) <= 1e-13 * scale:
            R[free, col] = 0
            continue
        R[row] = R[row] / piv
        factor = factor * piv
        for r in range(d):
            if r != row and R[r, col] != 0:
                R[r] = R[r] - R[r, col] * R[row]
        R[:, col] = 0
        R[row, col] = 1
        free.remove(row)
    if free:
        raise ValueError("Wronskian vanishes; polynomials are dependent")
    rows = [PolyVector(complex(v) if cplx else float(v) for v in r) for r in R]
    return rows, (complex(factor) if cplx else float(factor))


def wronskian_of_polys(polys: Sequence[PolyVector], monic: bool = False,
                       exact: Optional[bool] = None) -> list:
    """Wronskian determinant of the given polynomials, lowest degree first.

    The derivative matrix is expanded by cofactors over column subsets, in
    exact arithmetic for rational inputs. Float inputs are first brought to
    reduced echelon form with partial pivoting, which removes most of the
    cancellation the expansion would otherwise suffer. Raises ValueError when
    the Wronskian vanishes (dependent input).
    """
    if not polys:
        raise ValueError("need at least one polynomial")
    if exact is None:
        exact = all(is_exact(c) for p in polys for c in p.coeffs)
    factor = 1
    if not exact:
        polys, factor = _reduce_float_basis(polys)
    monos = [poly_trim(p.monomial()) for p in polys]
    d = len(monos)
    rows = []
    derivs = [list(p) for p in monos]
    for _ in range(d):
        rows.append([list(p) for p in derivs])
        derivs = [poly_derivative(p) for p in derivs]
    det = poly_trim(_poly_det(rows))
    if exact:
        det = [Fraction(c) for c in det]
    else:
        cplx = any(isinstance(c, complex) for p in monos for c in p)
        bound = _poly_det(rows, absolute=True)
        bound = bound + [0.0] * (len(det) - len(bound))
        # coefficients that cancel down to rounding level are exact zeros
        det = [0.0 if abs(v) <= 1e-13 * b else (complex(v) if cplx else float(v)) * factor
               for v, b in zip(det, bound)]
        det = poly_trim(det)
    if all(c == 0 for c in det):
        raise ValueError("Wronskian vanishes; polynomials are dependent")
    if monic:
        lead = det[-1]
        det = [c / lead for c in det]
    return det
