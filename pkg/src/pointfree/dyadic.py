"""Exact dyadic rationals m / 2**e."""

from __future__ import annotations

import re
from fractions import Fraction

__all__ = ["Dyadic", "ZERO", "ONE", "HALF"]

_FRAC_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(?:2\s*\^\s*(\d+)|(\d+)))?\s*$")


class Dyadic:
    """A rational number whose denominator is a power of two.

    Stored canonically as ``(mantissa, exponent)`` with ``exponent >= 0`` and
    either ``exponent == 0`` or ``mantissa`` odd, so equal values have equal
    representations.
    """

    __slots__ = ("m", "e")

    def __init__(self, mantissa: int, exponent: int = 0):
        if exponent < 0:
            mantissa <<= -exponent
            exponent = 0
        elif mantissa == 0:
            exponent = 0
        elif exponent:
            tz = (mantissa & -mantissa).bit_length() - 1
            if tz:
                shift = min(tz, exponent)
                mantissa >>= shift
                exponent -= shift
        self.m = mantissa
        self.e = exponent

    @classmethod
    def pow2(cls, k: int) -> Dyadic:
        """``2**k`` for any integer ``k``."""
        return cls(1 << k, 0) if k >= 0 else cls(1, -k)

    @classmethod
    def parse(cls, text: str) -> Dyadic:
        """Parse ``m``, ``m/2^e`` or ``p/q`` with ``q`` a power of two."""
        match = _FRAC_RE.match(text)
        if not match:
            raise ValueError(f"not a dyadic literal: {text!r}")
        num = int(match.group(1))
        if match.group(2) is not None:
            return cls(num, int(match.group(2)))
        if match.group(3) is not None:
            den = int(match.group(3))
            if den <= 0 or den & (den - 1):
                raise ValueError(f"denominator {den} is not a power of two")
            return cls(num, den.bit_length() - 1)
        return cls(num, 0)

    @classmethod
    def from_fraction(cls, value: Fraction) -> Dyadic:
        den = value.denominator
        if den & (den - 1):
            raise ValueError(f"{value} is not dyadic")
        return cls(value.numerator, den.bit_length() - 1)

    def _align(self, other: Dyadic) -> tuple[int, int, int]:
        if self.e >= other.e:
            return self.m, other.m << (self.e - other.e), self.e
        return self.m << (other.e - self.e), other.m, other.e

    def __add__(self, other):
        if isinstance(other, int):
            other = Dyadic(other)
        elif not isinstance(other, Dyadic):
            return NotImplemented
        a, b, e = self._align(other)
        return Dyadic(a + b, e)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = Dyadic(other)
        elif not isinstance(other, Dyadic):
            return NotImplemented
        a, b, e = self._align(other)
        return Dyadic(a - b, e)

    def __rsub__(self, other):
        if isinstance(other, int):
            return Dyadic(other) - self
        return NotImplemented

    def __neg__(self) -> Dyadic:
        return Dyadic(-self.m, self.e)

    def __mul__(self, other):
        if isinstance(other, int):
            return Dyadic(self.m * other, self.e)
        if not isinstance(other, Dyadic):
            return NotImplemented
        return Dyadic(self.m * other.m, self.e + other.e)

    __rmul__ = __mul__

    def scale(self, k: int) -> Dyadic:
        """Multiply by ``2**k``."""
        return Dyadic(self.m, self.e - k)

    def _cmp(self, other) -> int:
        if isinstance(other, int):
            other = Dyadic(other)
        a, b, _ = self._align(other)
        return (a > b) - (a < b)

    def __eq__(self, other) -> bool:
        if isinstance(other, Dyadic):
            return self.m == other.m and self.e == other.e
        if isinstance(other, int):
            return self.e == 0 and self.m == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.m, self.e))

    def __lt__(self, other) -> bool:
        if not isinstance(other, (Dyadic, int)):
            return NotImplemented
        return self._cmp(other) < 0

    def __le__(self, other) -> bool:
        if not isinstance(other, (Dyadic, int)):
            return NotImplemented
        return self._cmp(other) <= 0

    def __gt__(self, other) -> bool:
        if not isinstance(other, (Dyadic, int)):
            return NotImplemented
        return self._cmp(other) > 0

    def __ge__(self, other) -> bool:
        if not isinstance(other, (Dyadic, int)):
            return NotImplemented
        return self._cmp(other) >= 0

    def __bool__(self) -> bool:
        return self.m != 0

    def to_fraction(self) -> Fraction:
        return Fraction(self.m, 1 << self.e)

    def decimal(self) -> str:
        """Exact terminating decimal expansion (dyadics always terminate)."""
        if self.e == 0:
            return str(self.m)
        digits = abs(self.m) * 5**self.e
        sign = "-" if self.m < 0 else ""
        text = str(digits).rjust(self.e + 1, "0")
        whole, frac = text[: -self.e], text[-self.e:].rstrip("0")
        return f"{sign}{whole}.{frac}" if frac else f"{sign}{whole}"

    def power_form(self) -> str:
        return str(self.m) if self.e == 0 else f"{self.m}/2^{self.e}"

    def __str__(self) -> str:
        return str(self.m) if self.e == 0 else f"{self.m}/{1 << self.e}"

    def __repr__(self) -> str:
        return f"Dyadic({self})"


ZERO = Dyadic(0)
ONE = Dyadic(1)
HALF = Dyadic(1, 1)
