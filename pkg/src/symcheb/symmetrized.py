"""Symmetrized Chebyshev Laurent polynomials and their coefficient signs.

For a rational parameter c and arity k, let

    A = (c / 2k) * sum_i (x_i + 1/x_i).

The symmetrized polynomials are T_n(A) (first kind) and U_n(A) (second
kind): Laurent polynomials in k variables, symmetric under every x_i -> 1/x_i
and under permutations of the variables.  The canonical construction is the
three-term recurrence P_{m+1} = 2A P_m - P_{m-1}, which costs O(n) sparse
multiplications by the fixed 2k-term polynomial 2A.

For k = 1 and c > 1 all coefficients on the parity support (|j| <= n,
n - j even) are strictly positive; for c < -1 every coefficient has sign
(-1)^n; for |c| < 1 neither pattern survives.  For k > 1 nonnegativity can
fail for c slightly above 1 -- the coefficient of x_1 at n = 3, k = 2 is
(3c/4)(3c^2/4 - 1), negative for 1 < c < 2/sqrt(3) -- so nothing stronger
than "nonnegative for c >= k" is assumed anywhere in this package, and
``sign_survey`` exists to map the empirical threshold.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from typing import Iterator, Sequence

from .chebyshev import ChebKind
from .errors import UsageError
from .laurent import Exponents, LaurentPoly, Scalar, as_scalar

_ZERO = Fraction(0)


@dataclass(frozen=True)
class SymChebSpec:
    """Which polynomial to build: kind, degree n, parameter c, arity k."""

    kind: ChebKind
    n: int
    c: Fraction
    k: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise UsageError(f"n must be a nonnegative integer, got {self.n!r}")
        if not isinstance(self.k, int) or self.k < 1:
            raise UsageError(f"k must be a positive integer, got {self.k!r}")
        object.__setattr__(self, "c", as_scalar(self.c))


@dataclass(frozen=True)
class PositivityReport:
    """Sign scan of one polynomial's coefficients.

    ``pattern_ok`` (univariate only, None for k > 1) additionally demands
    strict positivity at every j with |j| <= n and n - j even, and exact
    zero elsewhere.  ``witness`` is the lexicographically first exponent
    with a negative coefficient, absent when all are nonnegative.
    """

    all_nonnegative: bool
    pattern_ok: bool | None
    min_coefficient: Fraction
    witness: Exponents | None


@dataclass(frozen=True)
class UnivariateCoeffTable:
    """Rows 0..n_max of coefficient vectors of T_n(A) or U_n(A) at k = 1.

    Row n holds 2n+1 entries for j = -n..n; ``value`` returns exact zero
    outside that range.  Rows are symmetric (a_n^j = a_n^{-j}) and vanish
    when n - j is odd.
    """

    kind: ChebKind
    c: Fraction
    rows: tuple[tuple[Fraction, ...], ...]

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def value(self, n: int, j: int) -> Fraction:
        if not 0 <= n <= self.n_max:
            raise UsageError(f"row {n} not in table (0..{self.n_max})")
        if abs(j) > n:
            return _ZERO
        return self.rows[n][j + n]

    def row_poly(self, n: int) -> LaurentPoly:
        """Row n as a univariate Laurent polynomial."""
        row = self.rows[n] if 0 <= n <= self.n_max else None
        if row is None:
            raise UsageError(f"row {n} not in table (0..{self.n_max})")
        return LaurentPoly(1, {(j - n,): coeff for j, coeff in enumerate(row) if coeff})


class SignClass(enum.Enum):
    ALL_NONNEG = "ALL_NONNEG"
    ALTERNATING = "ALTERNATING"
    MIXED = "MIXED"


@dataclass(frozen=True)
class SurveyWitness:
    """First coefficient incompatible with every remaining sign pattern."""

    n: int
    exponents: Exponents
    value: Fraction


@dataclass(frozen=True)
class SurveyRow:
    c: Fraction
    classification: SignClass
    witness: SurveyWitness | None


def iter_polys(kind: ChebKind, c: Scalar, k: int) -> Iterator[LaurentPoly]:
    """Yield P_0, P_1, P_2, ... indefinitely via the three-term recurrence."""
    c = as_scalar(c)
    if not isinstance(k, int) or k < 1:
        raise UsageError(f"k must be a positive integer, got {k!r}")
    half = Fraction(c, 2 * k)
    argument = LaurentPoly(
        k,
        [
            ((0,) * i + (sign,) + (0,) * (k - 1 - i), half)
            for i in range(k)
            for sign in (1, -1)
        ],
    )
    doubled = 2 * argument
    prev = LaurentPoly.constant(k, 1)
    cur = argument if kind is ChebKind.FIRST else doubled
    yield prev
    while True:
        yield cur
        prev, cur = cur, doubled * cur - prev


def build_sequence(kind: ChebKind, c: Scalar, k: int, n_max: int) -> list[LaurentPoly]:
    """The polynomials for n = 0..n_max, sharing one recurrence pass."""
    if not isinstance(n_max, int) or n_max < 0:
        raise UsageError(f"n_max must be a nonnegative integer, got {n_max!r}")
    return list(islice(iter_polys(kind, c, k), n_max + 1))


def build(spec: SymChebSpec) -> LaurentPoly:
    """Construct T_n(A) or U_n(A) exactly."""
    return next(islice(iter_polys(spec.kind, spec.c, spec.k), spec.n, None))


def univariate_table(kind: ChebKind, c: Scalar, n_max: int) -> UnivariateCoeffTable:
    """Fill rows 0..n_max of the k = 1 coefficient table by the row recurrence.

    a_{n+1}^j = c (a_n^{j-1} + a_n^{j+1}) - a_{n-1}^j, seeded with row 0 = (1)
    and row 1 = (c, 0, c) for the second kind, (c/2, 0, c/2) for the first.
    Row n agrees exactly with the coefficients of build().
    """
    c = as_scalar(c)
    if not isinstance(n_max, int) or n_max < 0:
        raise UsageError(f"n_max must be a nonnegative integer, got {n_max!r}")
    rows: list[tuple[Fraction, ...]] = [(Fraction(1),)]
    if n_max >= 1:
        edge = c if kind is ChebKind.SECOND else Fraction(c, 2)
        rows.append((edge, _ZERO, edge))
    for m in range(1, n_max):
        prev, prevprev = rows[m], rows[m - 1]
        cur = [_ZERO] * (2 * m + 3)
        for idx, coeff in enumerate(prev):  # idx = j + m
            if coeff:
                cur[idx] += c * coeff  # j - 1 neighbour
                cur[idx + 2] += c * coeff  # j + 1 neighbour
        for idx, coeff in enumerate(prevprev):  # idx = j + m - 1
            if coeff:
                cur[idx + 2] -= coeff
        rows.append(tuple(cur))
    return UnivariateCoeffTable(kind=kind, c=c, rows=tuple(rows))


def fullform_coeff(n: int, c: Scalar, j: int) -> Fraction:
    """Coefficient of x^j in T_n(A) at k = 1 by the explicit expansion.

    (c^n / 2) * sum_m (-1/c^2)^m (n/(n-m)) C(n-m, m) C(n-2m, (n-2m-j)/2),
    binomials vanishing on negative, excessive, or half-integer lower index.
    The overall factor 1/2 is required: without it the x^2 coefficient at
    n = 2, c = 2 would come out 4 instead of the true 2.
    """
    c = as_scalar(c)
    if not isinstance(n, int) or n < 1:
        raise UsageError(f"the expansion needs n >= 1 (n = 0 is the constant 1), got {n!r}")
    if c == 0:
        raise UsageError("the expansion needs a nonzero c")
    if not isinstance(j, int) or abs(j) > n:
        raise UsageError(f"exponent j must satisfy |j| <= n = {n}, got {j!r}")
    ratio = Fraction(-1) / (c * c)
    total = _ZERO
    for m in range(n // 2 + 1):
        width = n - 2 * m
        lower2 = width - j
        if lower2 < 0 or lower2 % 2 or lower2 > 2 * width:
            continue
        total += (
            ratio**m * Fraction(n, n - m) * math.comb(n - m, m) * math.comb(width, lower2 // 2)
        )
    return c**n / 2 * total


def positivity_report(spec: SymChebSpec) -> PositivityReport:
    """Scan every stored coefficient of build(spec) for sign violations."""
    poly = build(spec)
    witness: Exponents | None = None
    for exponents, coeff in poly.terms():
        if coeff < 0:
            witness = exponents
            break
    pattern_ok: bool | None = None
    if spec.k == 1:
        pattern_ok = all(
            (poly.coeff((j,)) > 0) if (spec.n - j) % 2 == 0 else (poly.coeff((j,)) == 0)
            for j in range(-spec.n, spec.n + 1)
        )
    return PositivityReport(
        all_nonnegative=witness is None,
        pattern_ok=pattern_ok,
        min_coefficient=poly.min_coefficient(),
        witness=witness,
    )


def sign_survey(
    kind: ChebKind, k: int, n_max: int, c_grid: Sequence[Scalar]
) -> list[SurveyRow]:
    """Classify each c by the joint sign behaviour of P_0..P_{n_max}.

    ALL_NONNEG: every coefficient of every P_n is >= 0.  ALTERNATING: every
    coefficient of P_n has sign (-1)^n or is zero.  MIXED: neither pattern
    holds; the witness records the first (n, exponent) ruling out the last
    surviving pattern, scanning n upward and exponents lexicographically.
    """
    out = []
    for c in c_grid:
        c = as_scalar(c)
        nonneg_ok, alternating_ok = True, True
        witness = None
        for n, poly in enumerate(build_sequence(kind, c, k, n_max)):
            sign_wanted = -1 if n % 2 else 1
            for exponents, coeff in poly.terms():
                killed = False
                if nonneg_ok and coeff < 0:
                    nonneg_ok = False
                    killed = True
                if alternating_ok and (coeff > 0) != (sign_wanted > 0):
                    alternating_ok = False
                    killed = True
                if killed and not nonneg_ok and not alternating_ok:
                    witness = SurveyWitness(n=n, exponents=exponents, value=coeff)
                    break
            if witness is not None:
                break
        if nonneg_ok:
            classification = SignClass.ALL_NONNEG
        elif alternating_ok:
            classification = SignClass.ALTERNATING
        else:
            classification = SignClass.MIXED
        out.append(SurveyRow(c=c, classification=classification, witness=witness))
    return out
