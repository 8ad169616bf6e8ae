"""Coefficient distributions of symmetrized Chebyshev polynomials and their
Gaussian limit.

For c > 1 the coefficients of T_n(A), A = (c/2k) sum_i (x_i + 1/x_i), are
nonnegative, so dividing by the normalizer T_n(c) (the value at
x = (1, ..., 1)) turns them into a probability distribution on the integer
lattice Z^k.  This module computes exact moments of those distributions,
evaluates the characteristic function T_n((c/k) sum_j cos theta_j) / T_n(c),
and adjudicates the variance constant of the n -> infinity Gaussian limit.

Two candidate constants for the per-coordinate variance of z/sqrt(n) ship
side by side:

* ``sigma2_reported``  -- (c/k) [1 + sqrt((c+1)/(c-1))], the constant as
  originally reported for this family of distributions;
* ``sigma2_rederived`` -- c / (k sqrt(c^2-1)), obtained by redoing the
  characteristic-function limit (the cosine Taylor expansion enters with a
  minus sign, and the division by c + sqrt(c^2-1) is applied exactly once).

Exact computation sides with the rederived constant: the second moment
satisfies m2(n) = n (c/k) U_{n-1}(c) / T_n(c) identically, so m2(n)/n
increases to c/(k sqrt(c^2-1)) at a geometric rate.  ``convergence_report``
carries exact values and distances to both constants, so the adjudication
is reproducible rather than assumed.

Moment engines
--------------

Marginal reduction: the distribution of one coordinate l_1 is the
coefficient distribution of the univariate Laurent polynomial obtained by
setting every other variable to 1, i.e. of

    T_n((c/2k)(x + 1/x) + c(k-1)/k),

whose coefficient rows obey a three-term recurrence costing O(n^2) exact
operations in total.  Exact per-coordinate moments therefore reach n in the
hundreds even for k > 1, where materializing the full k-variate table would
not.  Off-diagonal covariances are taken from the full table at small n;
they vanish identically at every n because each coordinate can be mirrored
independently, and that exact zero is what rows carry beyond the
full-table ceiling.

Float-normalized mode runs the same row recurrence in floating point,
renormalizing every row by its sum (the running normalizer) so entries stay
within [0, 1]; sums accumulate left to right over the support.  Exact mode
is capped (128 for k = 1, 32 for k > 1 by default) because coefficient bit
lengths grow linearly with n; the cap is a parameter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .chebyshev import ChebKind, cheb_coeffs, eval_closed_T
from .errors import DomainError, UsageError
from .laurent import Exponents, Scalar, as_scalar
from .symmetrized import SymChebSpec, build

DEFAULT_EXACT_CEILING_UNIVARIATE = 128
DEFAULT_EXACT_CEILING_MULTIVARIATE = 32
DEFAULT_EXACT_CEILING_COUNTS = 1024
FULL_TABLE_CEILING = 32

_ZERO = Fraction(0)
_ONE = Fraction(1)

MODE_EXACT = "exact"
MODE_FLOAT = "float_normalized"


@dataclass(frozen=True)
class LatticeDistribution:
    """Normalized coefficient distribution of one T_n(A) on Z^k."""

    arity: int
    n: int
    probabilities: dict[Exponents, Fraction]


@dataclass(frozen=True)
class MomentReport:
    """Exact moments of a lattice distribution, with float summaries."""

    n: int
    mean: tuple[Fraction, ...]
    covariance: tuple[tuple[Fraction, ...], ...]
    fourth_moment_diag: tuple[Fraction, ...]
    m2_over_n: tuple[float, ...]
    kurtosis: tuple[float, ...]


@dataclass(frozen=True)
class ConvergenceRow:
    """One n of a convergence report.

    In exact mode ``m2_over_n``, ``kurtosis`` and ``max_offdiag`` are
    Fractions (suitable for exact monotonicity comparisons); in
    float-normalized mode they are floats.  Distances are always floats:
    the absolute gaps |m2/n - sigma2| to the two candidate constants.
    """

    n: int
    m2_over_n: Fraction | float
    kurtosis: Fraction | float
    max_offdiag: Fraction | float
    dist_reported: float
    dist_rederived: float


@dataclass(frozen=True)
class ConvergenceReport:
    c: float
    k: int
    mode: str
    sigma2_reported: float
    sigma2_rederived: float
    rows: tuple[ConvergenceRow, ...]


def distribution(n: int, c: Scalar, k: int) -> LatticeDistribution:
    """The exact coefficient distribution of T_n(A) on Z^k.

    Requires c > 1.  Every stored coefficient is checked; a negative one
    raises DomainError carrying the witness exponent (the distribution is
    undefined there).  The normalizer is cross-checked against the exact
    evaluation T_n(c).
    """
    if not isinstance(n, int) or n < 1:
        raise UsageError(f"n must be a positive integer, got {n!r}")
    c = as_scalar(c)
    if c <= 1:
        raise DomainError(f"coefficient distributions need c > 1, got c = {c}")
    poly = build(SymChebSpec(kind=ChebKind.FIRST, n=n, c=c, k=k))
    total = _ZERO
    for exponents, coeff in poly.terms():
        if coeff < 0:
            raise DomainError(
                f"coefficient at {list(exponents)} is negative ({coeff}); "
                "the coefficient distribution is undefined",
                witness=exponents,
            )
        total += coeff
    normalizer = cheb_coeffs(ChebKind.FIRST, n).evaluate(c)
    assert total == normalizer, "normalizer mismatch between build and direct evaluation"
    probabilities = {exponents: coeff / normalizer for exponents, coeff in poly.terms()}
    return LatticeDistribution(arity=k, n=n, probabilities=probabilities)


def moments(dist: LatticeDistribution) -> MomentReport:
    """Exact mean, covariance, and diagonal fourth moments."""
    k = dist.arity
    mean = [_ZERO] * k
    second = [[_ZERO] * k for _ in range(k)]
    fourth = [_ZERO] * k
    for exponents, prob in dist.probabilities.items():
        for i in range(k):
            e_i = exponents[i]
            if e_i:
                mean[i] += e_i * prob
                fourth[i] += e_i**4 * prob
                second[i][i] += e_i * e_i * prob
                for j in range(i + 1, k):
                    if exponents[j]:
                        term = e_i * exponents[j] * prob
                        second[i][j] += term
                        second[j][i] += term
    covariance = tuple(
        tuple(second[i][j] - mean[i] * mean[j] for j in range(k)) for i in range(k)
    )
    return MomentReport(
        n=dist.n,
        mean=tuple(mean),
        covariance=covariance,
        fourth_moment_diag=tuple(fourth),
        m2_over_n=tuple(float(second[i][i] / dist.n) for i in range(k)),
        kurtosis=tuple(float(fourth[i] / second[i][i] ** 2) for i in range(k)),
    )


def char_fn(n: int, c: Scalar | float, k: int, theta: Sequence[float]) -> float:
    """Characteristic function T_n((c/k) sum cos theta_j) / T_n(c).

    The numerator uses the square-root closed form when its argument has
    modulus >= 1 and Horner evaluation of the exact coefficient vector
    otherwise; the denominator always qualifies for the closed form.
    """
    if not isinstance(n, int) or n < 0:
        raise UsageError(f"n must be a nonnegative integer, got {n!r}")
    c_float = float(c)
    if c_float <= 1.0:
        raise DomainError(f"characteristic function needs c > 1, got c = {c_float}")
    if len(theta) != k:
        raise UsageError(f"theta has length {len(theta)}, expected k = {k}")
    y = (c_float / k) * sum(math.cos(t) for t in theta)
    if abs(y) >= 1.0:
        numerator = eval_closed_T(n, y)
    else:
        numerator = cheb_coeffs(ChebKind.FIRST, n).evaluate(y)
    return numerator / eval_closed_T(n, c_float)


def sigma2_reported(c: Scalar | float, k: int) -> float:
    """(c/k) [1 + sqrt((c+1)/(c-1))]: the originally reported variance constant."""
    c_float = float(c)
    if c_float <= 1.0:
        raise DomainError(f"variance constant is defined for c > 1 only, got c = {c_float}")
    return (c_float / k) * (1.0 + math.sqrt((c_float + 1.0) / (c_float - 1.0)))


def sigma2_rederived(c: Scalar | float, k: int) -> float:
    """c / (k sqrt(c^2-1)): the variance constant the exact moments converge to."""
    c_float = float(c)
    if c_float <= 1.0:
        raise DomainError(f"variance constant is defined for c > 1 only, got c = {c_float}")
    return c_float / (k * math.sqrt(c_float * c_float - 1.0))


# ---------------------------------------------------------------------------
# Row engines: coefficient rows of P_{m+1} = (alpha (x + 1/x) + beta) P_m
# - gamma P_{m-1}, stored densely as row m = entries for j = -m..m.
# ---------------------------------------------------------------------------


def _exact_rows(alpha, beta, gamma, row0: list, row1: list) -> Iterator[list]:
    yield row0
    yield row1
    prevprev, prev, m = row0, row1, 1
    while True:
        cur = [0 * alpha] * (2 * m + 3)
        for idx, coeff in enumerate(prev):  # idx = j + m; in cur, j sits at idx + 1
            if coeff:
                step = alpha * coeff
                cur[idx] += step
                cur[idx + 2] += step
                if beta:
                    cur[idx + 1] += beta * coeff
        for idx, coeff in enumerate(prevprev):  # idx = j + m - 1; in cur, j at idx + 2
            if coeff:
                cur[idx + 2] -= gamma * coeff
        yield cur
        prevprev, prev = prev, cur
        m += 1


def _float_rows(
    alpha: float, beta: float, gamma: float, row0: list[float], row1: list[float]
) -> Iterator[list[float]]:
    """Like _exact_rows but renormalizing every row by its sum.

    Yields probability rows directly.  The scale ratio between consecutive
    rows is tracked so the recurrence stays consistent after normalization.
    """
    sum0 = 0.0
    for value in row0:
        sum0 += value
    prevprev = [v / sum0 for v in row0]
    sum1 = 0.0
    for value in row1:
        sum1 += value
    prev = [v / sum1 for v in row1]
    ratio = sum0 / sum1  # s_{m-1} / s_m
    yield prevprev
    yield prev
    m = 1
    while True:
        cur = [0.0] * (2 * m + 3)
        for idx, coeff in enumerate(prev):
            if coeff:
                step = alpha * coeff
                cur[idx] += step
                cur[idx + 2] += step
                if beta:
                    cur[idx + 1] += beta * coeff
        scaled_gamma = gamma * ratio
        for idx, coeff in enumerate(prevprev):
            if coeff:
                cur[idx + 2] -= scaled_gamma * coeff
        row_sum = 0.0
        for value in cur:  # left-to-right over the support, by contract
            row_sum += value
        cur = [value / row_sum for value in cur]
        ratio = 1.0 / row_sum
        yield cur
        prevprev, prev = prev, cur
        m += 1


def _check_n_list(n_list: Sequence[int]) -> list[int]:
    ns = list(n_list)
    if not ns:
        raise UsageError("n list must not be empty")
    if any(not isinstance(n, int) or n < 1 for n in ns):
        raise UsageError(f"n values must be positive integers, got {ns!r}")
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise UsageError(f"n values must be strictly increasing, got {ns!r}")
    return ns


def _row_second_fourth(row: Sequence, m: int):
    """(sum, sum j^2 row_j, sum j^4 row_j) accumulated left to right."""
    total = row[0] * 0
    second = total
    fourth = total
    for idx, value in enumerate(row):
        j = idx - m
        total += value
        if j:
            jj = j * j
            second += jj * value
            fourth += jj * jj * value
    return total, second, fourth


def marginal_moments_exact(
    c: Scalar, k: int, n_list: Sequence[int]
) -> list[tuple[int, Fraction, Fraction]]:
    """Exact (n, m2, m4) of one coordinate of the distribution, per n.

    Every requested row is scanned for negative entries; a negative raises
    DomainError with the witness exponent.  For k = 1 the rows are the
    actual coefficients, so the scan is definitive; for k > 1 they are
    marginal sums, a necessary condition only -- joint nonnegativity is
    guaranteed for c >= k and certified by ``distribution`` wherever the
    full table is materialized.
    """
    ns = _check_n_list(n_list)
    c = as_scalar(c)
    if c <= 1:
        raise DomainError(f"coefficient distributions need c > 1, got c = {c}")
    alpha = Fraction(c, k)
    beta = 2 * Fraction(c * (k - 1), k)
    row1 = [alpha / 2, beta / 2, alpha / 2]
    out = []
    wanted = set(ns)
    for m, row in enumerate(_exact_rows(alpha, beta, _ONE, [_ONE], row1)):
        if m in wanted:
            for idx, coeff in enumerate(row):
                if coeff < 0:
                    kind = "coefficient" if k == 1 else "marginal coefficient sum"
                    raise DomainError(
                        f"{kind} at exponent {idx - m} of row n = {m} is "
                        f"negative ({coeff}); the distribution is undefined",
                        witness=(idx - m,),
                    )
            total, second, fourth = _row_second_fourth(row, m)
            out.append((m, second / total, fourth / total))
        if m >= ns[-1]:
            break
    return out


def marginal_moments_float(
    c: float, k: int, n_list: Sequence[int]
) -> list[tuple[int, float, float]]:
    """Float-normalized (n, m2, m4) of one coordinate, per n.

    No sign scan happens here: float mode is the large-n speed path and is
    validated against exact mode, where negativity detection lives.
    """
    ns = _check_n_list(n_list)
    c_float = float(c)
    if c_float <= 1.0:
        raise DomainError(f"coefficient distributions need c > 1, got c = {c_float}")
    alpha = c_float / k
    beta = 2.0 * c_float * (k - 1) / k
    row1 = [alpha / 2.0, beta / 2.0, alpha / 2.0]
    out = []
    wanted = set(ns)
    for m, row in enumerate(_float_rows(alpha, beta, 1.0, [1.0], row1)):
        if m in wanted:
            _, second, fourth = _row_second_fourth(row, m)
            out.append((m, second, fourth))
        if m >= ns[-1]:
            break
    return out


def _fg_correction(r: int, n: int) -> int:
    return (r - 1) * (1 + (-1) ** n)


def fg_marginal_moments_exact(
    r: int, n_list: Sequence[int]
) -> list[tuple[int, Fraction, Fraction]]:
    """Exact (n, m2, m4) of one coordinate of the cyclically-reduced-word
    count distribution in rank r, trivial-class correction included.

    Runs the integer marginal of the rescaled count recurrence
    (V_{m+1} = (x + 1/x + 2(r-1)) V_m - (2r-1) V_{m-1}, V_0 = 2), divides
    by the corrected total (2r-1)^n + 1 + (r-1)(1 + (-1)^n).
    """
    ns = _check_n_list(n_list)
    if not isinstance(r, int) or r < 2:
        raise UsageError(f"rank must be an integer >= 2, got {r!r}")
    beta = 2 * (r - 1)
    out = []
    wanted = set(ns)
    for m, row in enumerate(_exact_rows(1, beta, 2 * r - 1, [2], [1, beta, 1])):
        if m in wanted:
            total, second, fourth = _row_second_fourth(row, m)
            assert total == (2 * r - 1) ** m + 1, "count total mismatch"
            denom = total + _fg_correction(r, m)
            out.append((m, Fraction(second, denom), Fraction(fourth, denom)))
        if m >= ns[-1]:
            break
    return out


def fg_marginal_moments_float(
    r: int, n_list: Sequence[int]
) -> list[tuple[int, float, float]]:
    """Float-normalized counterpart of fg_marginal_moments_exact."""
    ns = _check_n_list(n_list)
    if not isinstance(r, int) or r < 2:
        raise UsageError(f"rank must be an integer >= 2, got {r!r}")
    beta = float(2 * (r - 1))
    out = []
    wanted = set(ns)
    for m, row in enumerate(
        _float_rows(1.0, beta, float(2 * r - 1), [2.0], [1.0, beta, 1.0])
    ):
        if m in wanted:
            _, second, fourth = _row_second_fourth(row, m)
            # Trivial-class correction, applied as the exact ratio
            # total / (total + correction); negligible for large n.
            poly_total = (2 * r - 1) ** m + 1
            factor = float(Fraction(poly_total, poly_total + _fg_correction(r, m)))
            out.append((m, second * factor, fourth * factor))
        if m >= ns[-1]:
            break
    return out


# ---------------------------------------------------------------------------
# Convergence reports
# ---------------------------------------------------------------------------


def _exact_ceiling_default(k: int) -> int:
    return DEFAULT_EXACT_CEILING_UNIVARIATE if k == 1 else DEFAULT_EXACT_CEILING_MULTIVARIATE


def _offdiag_exact(n: int, c: Fraction, k: int) -> Fraction:
    """Max |off-diagonal covariance| from the full k-variate table."""
    report = moments(distribution(n, c, k))
    values = [
        abs(report.covariance[i][j]) for i in range(k) for j in range(k) if i != j
    ]
    return max(values, default=_ZERO)


def convergence_report(
    c: Scalar | float,
    k: int,
    n_list: Sequence[int],
    mode: str = MODE_EXACT,
    exact_ceiling: int | None = None,
) -> ConvergenceReport:
    """Per-n variance and kurtosis summaries with distances to both
    candidate limit constants.

    Exact mode requires a rational c and every n at or below the ceiling
    (128 for k = 1, 32 for k > 1 unless overridden); beyond it, use
    float-normalized mode.  Off-diagonal covariances come from the full
    k-variate table while n <= 32, which also certifies joint nonnegativity
    there; above that the exact structural zero is reported (each
    coordinate can be mirrored independently, forcing E[l_i l_j] = 0 at
    every n).
    """
    if mode not in (MODE_EXACT, MODE_FLOAT):
        raise UsageError(f"mode must be {MODE_EXACT!r} or {MODE_FLOAT!r}, got {mode!r}")
    if not isinstance(k, int) or k < 1:
        raise UsageError(f"k must be a positive integer, got {k!r}")
    ns = _check_n_list(n_list)
    s2_reported = sigma2_reported(c, k)
    s2_rederived = sigma2_rederived(c, k)
    rows = []
    if mode == MODE_EXACT:
        if isinstance(c, float):
            raise UsageError("exact mode requires a rational c (int or Fraction)")
        ceiling = exact_ceiling if exact_ceiling is not None else _exact_ceiling_default(k)
        if ns[-1] > ceiling:
            raise UsageError(
                f"n = {ns[-1]} exceeds the exact-mode ceiling of {ceiling}; "
                f"use mode={MODE_FLOAT!r} or raise the ceiling"
            )
        c_exact = as_scalar(c)
        for n, m2, m4 in marginal_moments_exact(c_exact, k, ns):
            m2_over_n = m2 / n
            if k > 1 and n <= FULL_TABLE_CEILING:
                offdiag = _offdiag_exact(n, c_exact, k)
            else:
                offdiag = _ZERO
            rows.append(
                ConvergenceRow(
                    n=n,
                    m2_over_n=m2_over_n,
                    kurtosis=m4 / (m2 * m2),
                    max_offdiag=offdiag,
                    dist_reported=abs(float(m2_over_n) - s2_reported),
                    dist_rederived=abs(float(m2_over_n) - s2_rederived),
                )
            )
    else:
        for n, m2, m4 in marginal_moments_float(float(c), k, ns):
            m2_over_n = m2 / n
            rows.append(
                ConvergenceRow(
                    n=n,
                    m2_over_n=m2_over_n,
                    kurtosis=m4 / (m2 * m2),
                    max_offdiag=0.0,
                    dist_reported=abs(m2_over_n - s2_reported),
                    dist_rederived=abs(m2_over_n - s2_rederived),
                )
            )
    return ConvergenceReport(
        c=float(c),
        k=k,
        mode=mode,
        sigma2_reported=s2_reported,
        sigma2_rederived=s2_rederived,
        rows=tuple(rows),
    )


def freegroup_convergence_report(
    r: int,
    n_list: Sequence[int],
    mode: str = MODE_FLOAT,
    exact_ceiling: int | None = None,
) -> ConvergenceReport:
    """Convergence report for the count distributions of rank r.

    The underlying parameter c = r/sqrt(2r-1) is irrational, so rows run on
    the integer-rescaled count recurrence instead of a rational c.  The
    rederived constant simplifies algebraically to exactly 1/(r-1); the
    reported constant is evaluated at the same parameter point.
    """
    if mode not in (MODE_EXACT, MODE_FLOAT):
        raise UsageError(f"mode must be {MODE_EXACT!r} or {MODE_FLOAT!r}, got {mode!r}")
    if not isinstance(r, int) or r < 2:
        raise UsageError(f"rank must be an integer >= 2, got {r!r}")
    ns = _check_n_list(n_list)
    c_float = r / math.sqrt(2 * r - 1)
    s2_reported = sigma2_reported(c_float, r)
    s2_rederived = 1.0 / (r - 1)
    rows = []
    if mode == MODE_EXACT:
        ceiling = exact_ceiling if exact_ceiling is not None else DEFAULT_EXACT_CEILING_COUNTS
        if ns[-1] > ceiling:
            raise UsageError(
                f"n = {ns[-1]} exceeds the exact-mode ceiling of {ceiling}; "
                f"use mode={MODE_FLOAT!r} or raise the ceiling"
            )
        for n, m2, m4 in fg_marginal_moments_exact(r, ns):
            m2_over_n = m2 / n
            rows.append(
                ConvergenceRow(
                    n=n,
                    m2_over_n=m2_over_n,
                    kurtosis=m4 / (m2 * m2),
                    max_offdiag=_ZERO,
                    dist_reported=abs(float(m2_over_n) - s2_reported),
                    dist_rederived=abs(float(m2_over_n) - s2_rederived),
                )
            )
    else:
        for n, m2, m4 in fg_marginal_moments_float(r, ns):
            m2_over_n = m2 / n
            rows.append(
                ConvergenceRow(
                    n=n,
                    m2_over_n=m2_over_n,
                    kurtosis=m4 / (m2 * m2),
                    max_offdiag=0.0,
                    dist_reported=abs(m2_over_n - s2_reported),
                    dist_rederived=abs(m2_over_n - s2_rederived),
                )
            )
    return ConvergenceReport(
        c=c_float,
        k=r,
        mode=mode,
        sigma2_reported=s2_reported,
        sigma2_rederived=s2_rederived,
        rows=tuple(rows),
    )
