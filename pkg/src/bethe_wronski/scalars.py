"""Scalar and matrix helpers shared by the exact and floating-point code paths.

Exact scalars are :class:`fractions.Fraction` at API boundaries and
``flint.fmpq`` inside matrices; floating-point matrices are numpy arrays.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Any, Iterable, Sequence

import numpy as np
from flint import fmpq, fmpq_mat, fmpz

Scalar = Any  # Fraction | float | complex


def parse_scalar(text: Any) -> Scalar:
    """Parse ``"3/2"``, ``"-4"``, ``"1.25"`` or a number.

    Strings without a decimal point or exponent are exact rationals; decimal
    strings are also read exactly (``"0.1"`` becomes 1/10). Strings containing
    ``j`` are complex floats.
    """
    if isinstance(text, (Fraction, int)) and not isinstance(text, bool):
        return Fraction(text)
    if isinstance(text, fmpq):
        return to_fraction(text)
    if isinstance(text, (float, complex)):
        return text
    if not isinstance(text, str):
        raise ValueError(f"cannot parse scalar {text!r}")
    s = text.strip()
    if not s:
        raise ValueError("empty scalar")
    if "j" in s:
        try:
            return complex(s)
        except ValueError as exc:
            raise ValueError(f"cannot parse scalar {text!r}") from exc
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse scalar {text!r}") from exc


def is_exact(x: Any) -> bool:
    return isinstance(x, (Rational, fmpq, fmpz)) and not isinstance(x, bool)


def to_fraction(x: Any) -> Fraction:
    if isinstance(x, fmpq):
        return Fraction(int(x.p), int(x.q))
    if isinstance(x, fmpz):
        return Fraction(int(x))
    return Fraction(x)


def to_fmpq(x: Any) -> fmpq:
    if isinstance(x, fmpq):
        return x
    f = Fraction(x)
    return fmpq(f.numerator, f.denominator)


def format_scalar(x: Any) -> str:
    """Deterministic string form used in JSON output."""
    if isinstance(x, (fmpq, fmpz)):
        x = to_fraction(x)
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, complex):
        if x.imag == 0:
            return repr(float(x.real))
        return repr(complex(x))
    return repr(float(x))


# ---------------------------------------------------------------- matrices

def exact_matrix(rows: Sequence[Sequence[Any]]) -> fmpq_mat:
    return fmpq_mat([[to_fmpq(v) for v in row] for row in rows])


def is_exact_matrix(a: Any) -> bool:
    return isinstance(a, fmpq_mat)


def mat_mul(a, b):
    if isinstance(a, fmpq_mat):
        return a * b
    return a @ b


def mat_scale(a, c):
    """Multiply a matrix by a scalar, keeping exact matrices exact."""
    if isinstance(a, fmpq_mat):
        return a * to_fmpq(c)
    return a * c


def mat_zeros_like(a):
    if isinstance(a, fmpq_mat):
        return fmpq_mat(a.nrows(), a.ncols())
    return np.zeros_like(a)


def mat_identity(dim: int, exact: bool, dtype=float):
    if exact:
        m = fmpq_mat(dim, dim)
        for i in range(dim):
            m[i, i] = 1
        return m
    return np.eye(dim, dtype=dtype)


def mat_is_zero(a, tol: float = 0.0) -> bool:
    if isinstance(a, fmpq_mat):
        return not bool(a)
    return a.size == 0 or float(np.max(np.abs(a))) <= tol


def mat_trace(a):
    if isinstance(a, fmpq_mat):
        s = fmpq(0)
        for i in range(a.nrows()):
            s += a[i, i]
        return to_fraction(s)
    return np.trace(a)


def mat_shape(a) -> tuple[int, int]:
    if isinstance(a, fmpq_mat):
        return a.nrows(), a.ncols()
    return a.shape


def to_float_matrix(a, dtype=float) -> np.ndarray:
    if isinstance(a, fmpq_mat):
        r, c = a.nrows(), a.ncols()
        out = np.empty((r, c), dtype=dtype)
        for i in range(r):
            for j in range(c):
                e = a[i, j]
                out[i, j] = int(e.p) / int(e.q)
        return out
    return np.asarray(a, dtype=dtype)


def matrix_to_json(a) -> list[list[str]]:
    """Row-major nested lists of scalar strings."""
    if isinstance(a, fmpq_mat):
        return [[format_scalar(a[i, j]) for j in range(a.ncols())] for i in range(a.nrows())]
    return [[format_scalar(v) for v in row] for row in np.asarray(a).tolist()]


def max_abs(a) -> float:
    if isinstance(a, fmpq_mat):
        return max((abs(float(e)) for e in a.entries()), default=0.0)
    return float(np.max(np.abs(a))) if a.size else 0.0


def exact_det(rows: Sequence[Sequence[Any]]) -> Fraction:
    if not rows:
        return Fraction(1)
    return to_fraction(exact_matrix(rows).det())


def fractions_of(values: Iterable[Any]) -> list[Fraction]:
    return [to_fraction(v) for v in values]
