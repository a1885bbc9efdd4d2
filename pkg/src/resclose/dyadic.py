"""Exact dyadic rationals ``a / 2**e``.

Every closeness value is a finite sum of powers of 1/2, so it is a dyadic
rational.  Keeping values in this form gives exact equality and ordering
without floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
import re

# numerators are held to a signed 128-bit range
NUMERATOR_BITS = 127

_FRACTION_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(?:2\s*\^\s*(\d+)|(\d+)))?\s*$")
_DECIMAL_RE = re.compile(r"^\s*-?\d+\.\d+\s*$")


class DyadicError(ValueError):
    """Raised for values that cannot be represented as a dyadic rational."""


def _check(num: int) -> int:
    if abs(num) >> NUMERATOR_BITS:
        raise OverflowError(f"dyadic numerator exceeds {NUMERATOR_BITS + 1}-bit capacity")
    return num


@total_ordering
class Dyadic:
    """Immutable exact value ``numerator / 2**exponent`` in canonical form.

    Canonical form: the exponent is 0 for zero and for integers, otherwise the
    numerator is odd.
    """

    __slots__ = ("_num", "_exp")

    def __init__(self, numerator: int = 0, exponent: int = 0):
        if exponent < 0:
            raise DyadicError("exponent must be non-negative")
        if numerator == 0:
            exponent = 0
        elif exponent:
            tz = (numerator & -numerator).bit_length() - 1
            shift = min(tz, exponent)
            numerator >>= shift
            exponent -= shift
        object.__setattr__(self, "_num", _check(numerator))
        object.__setattr__(self, "_exp", exponent)

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic is immutable")

    def __reduce__(self):
        return (Dyadic, (self._num, self._exp))

    @property
    def numerator(self) -> int:
        return self._num

    @property
    def exponent(self) -> int:
        return self._exp

    @classmethod
    def from_fraction(cls, value) -> Dyadic:
        """Convert an int or Fraction whose denominator is a power of two."""
        if isinstance(value, Dyadic):
            return value
        frac = Fraction(value)
        den = frac.denominator
        if den & (den - 1):
            raise DyadicError(f"{frac} is not dyadic")
        return cls(frac.numerator, den.bit_length() - 1)

    @classmethod
    def parse(cls, text: str) -> Dyadic:
        """Parse ``"a"``, ``"a/b"`` (b a power of two), ``"a/2^e"`` or an exact decimal."""
        if _DECIMAL_RE.match(text):
            return cls.from_fraction(Fraction(text.strip()))
        m = _FRACTION_RE.match(text)
        if not m:
            raise DyadicError(f"cannot parse dyadic value {text!r}")
        num = int(m.group(1))
        if m.group(2) is not None:
            return cls(num, int(m.group(2)))
        if m.group(3) is not None:
            return cls.from_fraction(Fraction(num, int(m.group(3))))
        return cls(num)

    def to_fraction(self) -> Fraction:
        return Fraction(self._num, 1 << self._exp)

    def __float__(self) -> float:
        return float(self.to_fraction())

    def _align(self, other: Dyadic) -> tuple[int, int, int]:
        e = max(self._exp, other._exp)
        return self._num << (e - self._exp), other._num << (e - other._exp), e

    @staticmethod
    def _coerce(other):
        if isinstance(other, Dyadic):
            return other
        if isinstance(other, (int, Fraction)):
            return Dyadic.from_fraction(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, e = self._align(other)
        return Dyadic(a + b, e)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, e = self._align(other)
        return Dyadic(a - b, e)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return Dyadic(-self._num, self._exp)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Dyadic(self._num * other._num, self._exp + other._exp)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Dyadic):
            return self._num == other._num and self._exp == other._exp
        if isinstance(other, (int, Fraction)):
            return self.to_fraction() == other
        return NotImplemented

    def __lt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, _ = self._align(other)
        return a < b

    def __hash__(self):
        # agree with hash(Fraction) and hash(int) for equal values
        return hash(self.to_fraction())

    def __bool__(self):
        return self._num != 0

    def fraction_str(self) -> str:
        """Exact rendering, e.g. ``"19/2"`` or ``"16"``."""
        if self._exp == 0:
            return str(self._num)
        return f"{self._num}/{1 << self._exp}"

    def decimal_str(self) -> str:
        """Exact decimal expansion (always finite for a dyadic value)."""
        if self._exp == 0:
            return str(self._num)
        sign = "-" if self._num < 0 else ""
        scaled = abs(self._num) * 5**self._exp
        digits = str(scaled).rjust(self._exp + 1, "0")
        return f"{sign}{digits[:-self._exp]}.{digits[-self._exp:]}"

    def __str__(self):
        return self.fraction_str()

    def __repr__(self):
        return f"Dyadic({self._num}, {self._exp})"


ZERO = Dyadic(0)
