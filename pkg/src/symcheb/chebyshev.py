"""Univariate Chebyshev machinery with exact integer coefficients.

Both kinds satisfy the same three-term recurrence f_{n+1} = 2x f_n - f_{n-1};
they differ in the degree-1 seed (T_1 = x, U_1 = 2x).  Coefficients are exact
Python ints; evaluation is generic Horner, so it works with floats
and Fractions alike.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, UsageError


class ChebKind(enum.Enum):
    """First kind (T, cosine family) or second kind (U, sine family)."""

    FIRST = "T"
    SECOND = "U"


@dataclass(frozen=True)
class ChebCoeffVector:
    """Dense coefficient vector of T_n or U_n; index j = coefficient of x^j."""

    n: int
    coeffs: tuple[int, ...]

    def evaluate(self, x):
        """Horner evaluation; exact for int/Fraction inputs, float for floats."""
        acc = x * 0  # zero of the input's type
        for coeff in reversed(self.coeffs):
            acc = acc * x + coeff
        return acc


@lru_cache(maxsize=None)
def cheb_coeffs(kind: ChebKind, n: int) -> ChebCoeffVector:
    """Exact coefficients of T_n (FIRST) or U_n (SECOND) via the recurrence."""
    if not isinstance(n, int) or n < 0:
        raise UsageError(f"degree must be a nonnegative integer, got {n!r}")
    if n == 0:
        return ChebCoeffVector(0, (1,))
    prev = [1]
    cur = [0, 1] if kind is ChebKind.FIRST else [0, 2]
    for _ in range(n - 1):
        nxt = [0] * (len(cur) + 1)
        for j, coeff in enumerate(cur):
            nxt[j + 1] += 2 * coeff
        for j, coeff in enumerate(prev):
            nxt[j] -= coeff
        prev, cur = cur, nxt
    return ChebCoeffVector(n, tuple(cur))


def coeff_formula_T(n: int, m: int) -> Fraction:
    """Coefficient of x^(n-2m) in T_n by the closed formula.

    (-1)^m * (n/(n-m)) * C(n-m, m) * 2^(n-2m-1), exact rational arithmetic
    throughout: the last factor is 2^-1 for the constant term of an even n,
    and the product is asserted integral at the end.
    """
    if not isinstance(n, int) or n < 1:
        raise UsageError(f"the coefficient formula needs n >= 1, got {n!r}")
    if not isinstance(m, int) or m < 0 or m > n // 2:
        raise UsageError(f"m must lie in [0, n//2] = [0, {n // 2}], got {m!r}")
    value = (
        Fraction(-1) ** m
        * Fraction(n, n - m)
        * math.comb(n - m, m)
        * Fraction(2) ** (n - 2 * m - 1)
    )
    assert value.denominator == 1, f"non-integer Chebyshev coefficient at n={n}, m={m}"
    return value


def eval_closed_T(n: int, x: float) -> float:
    """T_n(x) for |x| >= 1 via the square-root closed form.

    0.5 * ((x - sqrt(x^2-1))^n + (x + sqrt(x^2-1))^n).  Callers needing
    |x| < 1 should evaluate the coefficient vector instead.
    """
    if not isinstance(n, int) or n < 0:
        raise UsageError(f"degree must be a nonnegative integer, got {n!r}")
    x = float(x)
    if abs(x) < 1.0:
        raise DomainError(f"closed form requires |x| >= 1, got x = {x}")
    root = math.sqrt(x * x - 1.0)
    return 0.5 * ((x - root) ** n + (x + root) ** n)
