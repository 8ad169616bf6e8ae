"""Exact sparse multivariate Laurent polynomial arithmetic over the rationals.

A polynomial in k variables is stored as a map from exponent vectors
(length-k tuples of signed ints, so negative powers are allowed) to nonzero
``fractions.Fraction`` coefficients.  All arithmetic is exact; there is no
rounding anywhere in this module.

Canonical form: zero coefficients are never stored, so two polynomials are
equal iff their term maps are equal.  Values are immutable once constructed
and safe to share between threads.

Example (k = 1):  x^2 + 2 + x^-2  ->  {(2,): 1, (0,): 2, (-2,): 1}
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import DomainError, UsageError

Exponents = tuple[int, ...]
Scalar = Union[int, Fraction]

_ZERO = Fraction(0)


def as_scalar(value: Scalar) -> Fraction:
    """Coerce an exact scalar to Fraction, rejecting floats and other types."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise UsageError(f"expected an exact rational (int or Fraction), got {type(value).__name__}")


def format_exact(value: Scalar) -> str:
    """Render a rational as ``p/q`` in lowest terms with q > 0.

    Integer values are rendered as ``p/1``, never abbreviated; serialized
    output is bit-exact and stable across platforms.
    """
    value = as_scalar(value)
    return f"{value.numerator}/{value.denominator}"


def parse_exact(text: str) -> Fraction:
    """Parse ``p/q`` or an integer literal into a Fraction.

    Decimal notation is rejected: exact-mode parameters must not pass
    through binary floating point.
    """
    text = text.strip()
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not an exact rational (use p/q or an integer): {text!r}") from exc


class LaurentPoly:
    """An immutable sparse Laurent polynomial with exact rational coefficients."""

    __slots__ = ("_arity", "_terms")

    def __init__(
        self,
        arity: int,
        terms: Mapping[Sequence[int], Scalar] | Iterable[tuple[Sequence[int], Scalar]] = (),
    ):
        if not isinstance(arity, int) or arity < 1:
            raise UsageError(f"arity must be a positive integer, got {arity!r}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        table: dict[Exponents, Fraction] = {}
        for exponents, coeff in items:
            key = tuple(exponents)
            if len(key) != arity or not all(isinstance(e, int) for e in key):
                raise UsageError(f"exponent vector {key!r} does not have arity {arity}")
            value = table.get(key, _ZERO) + as_scalar(coeff)
            if value:
                table[key] = value
            else:
                table.pop(key, None)
        self._arity = arity
        self._terms = table

    @classmethod
    def _raw(cls, arity: int, table: dict[Exponents, Fraction]) -> "LaurentPoly":
        """Internal fast path: adopt a canonical term table without validation."""
        poly = object.__new__(cls)
        poly._arity = arity
        poly._terms = table
        return poly

    @classmethod
    def zero(cls, arity: int) -> "LaurentPoly":
        return cls(arity)

    @classmethod
    def constant(cls, arity: int, value: Scalar) -> "LaurentPoly":
        return cls(arity, {(0,) * arity: value})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff: Scalar = 1) -> "LaurentPoly":
        exponents = tuple(exponents)
        return cls(len(exponents), {exponents: coeff})

    @property
    def arity(self) -> int:
        return self._arity

    def coeff(self, exponents: Sequence[int]) -> Fraction:
        """The coefficient at an exponent vector; exact zero if absent."""
        key = tuple(exponents)
        if len(key) != self._arity:
            raise UsageError(f"exponent vector {key!r} does not have arity {self._arity}")
        return self._terms.get(key, _ZERO)

    def terms(self) -> Iterator[tuple[Exponents, Fraction]]:
        """Iterate (exponents, coefficient) sorted lexicographically by exponents."""
        for key in sorted(self._terms):
            yield key, self._terms[key]

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._arity == other._arity and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._arity, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{list(e)}: {format_exact(c)}" for e, c in self.terms())
        return f"LaurentPoly(arity={self._arity}, {{{body}}})"

    def _check_same_arity(self, other: "LaurentPoly") -> None:
        if self._arity != other._arity:
            raise UsageError(f"arity mismatch: {self._arity} vs {other._arity}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_same_arity(other)
        table = dict(self._terms)
        for key, coeff in other._terms.items():
            value = table.get(key, _ZERO) + coeff
            if value:
                table[key] = value
            else:
                table.pop(key, None)
        return LaurentPoly._raw(self._arity, table)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self._arity, {key: -coeff for key, coeff in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            scale = as_scalar(other)
            if not scale:
                return LaurentPoly._raw(self._arity, {})
            return LaurentPoly._raw(
                self._arity, {key: coeff * scale for key, coeff in self._terms.items()}
            )
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_same_arity(other)
        table: dict[Exponents, Fraction] = {}
        for key_a, coeff_a in self._terms.items():
            for key_b, coeff_b in other._terms.items():
                key = tuple(a + b for a, b in zip(key_a, key_b))
                value = table.get(key, _ZERO) + coeff_a * coeff_b
                if value:
                    table[key] = value
                else:
                    table.pop(key, None)
        return LaurentPoly._raw(self._arity, table)

    def __rmul__(self, other: Scalar) -> "LaurentPoly":
        return self.__mul__(other)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        """Exact value at a point with nonzero rational coordinates."""
        values = [as_scalar(v) for v in point]
        if len(values) != self._arity:
            raise UsageError(f"point of length {len(values)} does not match arity {self._arity}")
        if any(v == 0 for v in values):
            raise DomainError("cannot evaluate at a zero coordinate (negative exponents)")
        total = _ZERO
        for key, coeff in self._terms.items():
            term = coeff
            for value, exponent in zip(values, key):
                if exponent:
                    term *= value**exponent
            total += term
        return total

    def mirror(self, i: int) -> "LaurentPoly":
        """Substitute x_i -> 1/x_i (negate exponent i in every term)."""
        if not 0 <= i < self._arity:
            raise UsageError(f"variable index {i} out of range for arity {self._arity}")
        table = {
            key[:i] + (-key[i],) + key[i + 1 :]: coeff for key, coeff in self._terms.items()
        }
        return LaurentPoly._raw(self._arity, table)

    def min_coefficient(self) -> Fraction:
        """Smallest stored coefficient; exact zero for the zero polynomial."""
        if not self._terms:
            return _ZERO
        return min(self._terms.values())
