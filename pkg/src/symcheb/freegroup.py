"""Counting cyclically reduced words in a free group by homology class.

Letters of the rank-r free group are encoded as ints in [0, 2r): code 2i is
the generator a_{i+1} and code 2i+1 its inverse, so inversion is code ^ 1.
A word of length n is cyclically reduced when no adjacent pair cancels and
(for n >= 2) the first letter is not the inverse of the last.

Two independent counting routes are provided:

* ``enumerate_counts`` -- brute force.  Extends prefixes only with letters
  that do not cancel the previous one, filters the cyclic condition at full
  length, and tallies words by their vector of signed exponent sums.
  Visits 2r * (2r-1)^(n-1) words, subject to a budget.

* ``counts_by_formula`` -- generating function.  The count of class e is the
  coefficient of x^e in W_n + (r-1)(1 + (-1)^n), where W_n is the integer
  Laurent polynomial defined by W_0 = 2, W_1 = S, W_{m+1} = S W_m -
  (2r-1) W_{m-1}, with S = sum_i (x_i + 1/x_i).  W_n is the Dickson-style
  rescaling 2 (sqrt(2r-1))^n T_n(S / (2 sqrt(2r-1))): the rescaled
  recurrence keeps every intermediate value an integer, so no quadratic
  irrationality ever enters the computation.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterator

from .errors import ResourceBudgetError, UsageError

DEFAULT_ENUM_BUDGET = 10**8
ENUM_BUDGET_ENV = "SYMCHEB_ENUM_BUDGET"

HomologyClass = tuple[int, ...]


def inverse_letter(code: int) -> int:
    """The inverse of a letter code; an involution with no fixed point."""
    return code ^ 1


@dataclass(frozen=True)
class Word:
    """A sequence of letter codes in the rank-r free group."""

    letters: tuple[int, ...]
    rank: int

    def __post_init__(self):
        if not isinstance(self.rank, int) or self.rank < 1:
            raise UsageError(f"rank must be a positive integer, got {self.rank!r}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for code in self.letters:
            if not isinstance(code, int) or not 0 <= code < 2 * self.rank:
                raise UsageError(f"letter code {code!r} out of range for rank {self.rank}")

    def __len__(self) -> int:
        return len(self.letters)


def is_cyclically_reduced(word: Word) -> bool:
    """True iff no adjacent pair cancels and first != inverse(last).

    Reducedness is checked, not assumed.  Length-1 words are cyclically
    reduced; the empty word is excluded by convention (counts are defined
    for length >= 1 only).
    """
    letters = word.letters
    if not letters:
        return False
    for prev, cur in zip(letters, letters[1:]):
        if cur == prev ^ 1:
            return False
    if len(letters) >= 2 and letters[0] == letters[-1] ^ 1:
        return False
    return True


def homology_of(word: Word) -> HomologyClass:
    """Signed exponent sum per generator (the abelianized word)."""
    exponents = [0] * word.rank
    for code in word.letters:
        exponents[code >> 1] += 1 - 2 * (code & 1)
    return tuple(exponents)


@dataclass
class HomologyCountTable:
    """Word counts of one (rank, length) pair, keyed by homology class.

    Classes with zero count are not stored, so tables compare equal iff
    they tally identically.
    """

    r: int
    n: int
    counts: dict[HomologyClass, int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.counts.values())

    def sorted_items(self) -> Iterator[tuple[HomologyClass, int]]:
        for key in sorted(self.counts):
            yield key, self.counts[key]


def _check_rank_length(r: int, n: int) -> None:
    if not isinstance(r, int) or r < 2:
        raise UsageError(f"rank must be an integer >= 2, got {r!r}")
    if not isinstance(n, int) or n < 1:
        raise UsageError(f"word length must be an integer >= 1, got {n!r}")


def resolve_enum_budget(budget: int | None = None) -> int:
    """Explicit argument, else the SYMCHEB_ENUM_BUDGET variable, else 10^8."""
    if budget is not None:
        return budget
    raw = os.environ.get(ENUM_BUDGET_ENV)
    if raw is not None:
        try:
            return int(raw)
        except ValueError as exc:
            raise UsageError(f"{ENUM_BUDGET_ENV} must be an integer, got {raw!r}") from exc
    return DEFAULT_ENUM_BUDGET


def enumerate_counts(r: int, n: int, budget: int | None = None) -> HomologyCountTable:
    """Brute-force tally of all cyclically reduced words of length n in rank r.

    Enumeration is depth first in lexicographic code order, pruning any
    extension that cancels the previous letter; the cyclic condition is
    filtered at full length.
    """
    _check_rank_length(r, n)
    budget = resolve_enum_budget(budget)
    bound = 2 * r * (2 * r - 1) ** (n - 1)
    if bound > budget:
        raise ResourceBudgetError(
            f"enumeration of {bound} words exceeds the budget of {budget} "
            f"(raise {ENUM_BUDGET_ENV} or pass a larger budget)"
        )
    counts: dict[HomologyClass, int] = {}
    alphabet = range(2 * r)
    exponents = [0] * r
    last_excluded = [-1]  # inverse of the first letter, set per DFS root

    def extend(pos: int, prev: int) -> None:
        if pos == n - 1:
            for code in alphabet:
                if code == prev ^ 1 or code == last_excluded[0]:
                    continue
                gen, sign = code >> 1, 1 - 2 * (code & 1)
                exponents[gen] += sign
                key = tuple(exponents)
                counts[key] = counts.get(key, 0) + 1
                exponents[gen] -= sign
            return
        for code in alphabet:
            if code == prev ^ 1:
                continue
            gen, sign = code >> 1, 1 - 2 * (code & 1)
            exponents[gen] += sign
            extend(pos + 1, code)
            exponents[gen] -= sign

    if n == 1:
        for code in alphabet:
            gen, sign = code >> 1, 1 - 2 * (code & 1)
            exponents[gen] += sign
            key = tuple(exponents)
            counts[key] = counts.get(key, 0) + 1
            exponents[gen] -= sign
    else:
        for first in alphabet:
            gen, sign = first >> 1, 1 - 2 * (first & 1)
            exponents[gen] += sign
            last_excluded[0] = first ^ 1
            extend(1, first)
            exponents[gen] -= sign
    return HomologyCountTable(r=r, n=n, counts=counts)


def _mul_by_s(table: dict[HomologyClass, int], r: int) -> dict[HomologyClass, int]:
    """Multiply an integer Laurent table by S = sum_i (x_i + 1/x_i)."""
    out: dict[HomologyClass, int] = {}
    for key, coeff in table.items():
        for i in range(r):
            head, mid, tail = key[:i], key[i], key[i + 1 :]
            for sign in (1, -1):
                shifted = head + (mid + sign,) + tail
                out[shifted] = out.get(shifted, 0) + coeff
    return out


def counts_by_formula(r: int, n: int) -> HomologyCountTable:
    """Word counts from the rescaled generating-function recurrence.

    counts(e) = [x^e] W_n, plus (r-1)(1 + (-1)^n) on the trivial class only
    (a constant summand has no monomial content).  All arithmetic is exact
    over the integers.
    """
    _check_rank_length(r, n)
    d = 2 * r - 1
    zero = (0,) * r
    cur = {key: 1 for key in _mul_by_s({zero: 1}, r)}  # W_1 = S
    prev: dict[HomologyClass, int] = {zero: 2}  # W_0 = 2
    for _ in range(n - 1):
        nxt = _mul_by_s(cur, r)
        for key, coeff in prev.items():
            value = nxt.get(key, 0) - d * coeff
            if value:
                nxt[key] = value
            else:
                nxt.pop(key, None)
        prev, cur = cur, nxt
    counts = {key: coeff for key, coeff in cur.items() if coeff}
    correction = (r - 1) * (1 + (-1) ** n)
    if correction:
        counts[zero] = counts.get(zero, 0) + correction
        if not counts[zero]:
            del counts[zero]
    return HomologyCountTable(r=r, n=n, counts=counts)


def total_count(r: int, n: int) -> int:
    """Total cyclically reduced words of length n in rank r.

    (2r-1)^n + 1 + (r-1)(1 + (-1)^n): the value of the generating
    polynomial at x = (1, ..., 1), where the closed form of T_n collapses
    the rescaled evaluation to (2r-1)^n + 1.
    """
    _check_rank_length(r, n)
    return (2 * r - 1) ** n + 1 + (r - 1) * (1 + (-1) ** n)
