"""Closed intervals with exact rational endpoints.

A ``RatInterval`` [lo, hi] is the certification currency of this package:
every inexact quantity (pi, square roots, exponentials, ...) is carried as
an interval with ``Fraction`` endpoints that provably contains the true real
value.  Ring operations on intervals are exact; nothing is ever converted
through floating point.  Endpoint bit growth is controlled explicitly by
outward rounding to dyadic rationals (``rounded``), never implicitly.

All values are immutable, so intervals are safe to share across worker
processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


DEFAULT_BITS = 128
MAX_BITS = 4096


class DomainError(ValueError):
    """Operand outside the mathematical domain of an operation."""


def as_fraction(value) -> Fraction:
    """Coerce an int/Fraction-like rational to Fraction (never float)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"exact rational required, got {type(value).__name__}")


def round_frac(value: Fraction, bits: int, up: bool) -> Fraction:
    """Round to a dyadic rational with about ``bits`` significant bits.

    Directed: ``up=False`` never increases the value, ``up=True`` never
    decreases it, so rounding both endpoints outward preserves containment.
    """
    if value == 0:
        return value
    n, d = value.numerator, value.denominator
    # value ~ 2**(nbits - dbits); keep `bits` bits below that magnitude.
    shift = bits - (n.bit_length() - d.bit_length())
    if shift >= 0:
        num, den = n << shift, d
    else:
        num, den = n, d << (-shift)
    q = -((-num) // den) if up else num // den
    if shift >= 0:
        return Fraction(q, 1 << shift)
    return Fraction(q << (-shift))


@dataclass(frozen=True)
class Precision:
    """Target enclosure width 2**-bits for refinable evaluations."""

    bits: int = DEFAULT_BITS

    def __post_init__(self) -> None:
        if self.bits < 8:
            raise ValueError(f"precision must be at least 8 bits, got {self.bits}")


def as_bits(precision) -> int:
    """Accept an int bit count or a Precision and return the bit count."""
    bits = precision.bits if isinstance(precision, Precision) else int(precision)
    if bits < 8:
        raise ValueError(f"precision must be at least 8 bits, got {bits}")
    return bits


class RatInterval:
    """Closed interval [lo, hi] with exact rational endpoints, lo <= hi.

    Arithmetic is outward by construction: the result interval contains
    every pointwise result of operand values.  Operations whose exact result
    is rational (sums, products, integer powers) introduce no widening at
    all, so point intervals stay points until ``rounded`` is called.
    """

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi) -> None:
        lo = as_fraction(lo)
        hi = as_fraction(hi)
        if lo > hi:
            raise ValueError(f"interval endpoints out of order: [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, name, value):  # immutability guard
        raise AttributeError("RatInterval is immutable")

    @classmethod
    def point(cls, value) -> "RatInterval":
        v = as_fraction(value)
        return cls(v, v)

    # -- inspection ---------------------------------------------------------

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def is_point(self) -> bool:
        return self.lo == self.hi

    def is_positive(self) -> bool:
        return self.lo > 0

    def is_negative(self) -> bool:
        return self.hi < 0

    def contains(self, value) -> bool:
        v = as_fraction(value)
        return self.lo <= v <= self.hi

    def contains_interval(self, other: "RatInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def intersects(self, other: "RatInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RatInterval)
            and self.lo == other.lo
            and self.hi == other.hi
        )

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))

    def __repr__(self) -> str:
        return f"RatInterval({float(self.lo)!r}, {float(self.hi)!r})"

    # -- exact ring operations ----------------------------------------------

    def __add__(self, other) -> "RatInterval":
        o = _coerce(other)
        return RatInterval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self) -> "RatInterval":
        return RatInterval(-self.hi, -self.lo)

    def __sub__(self, other) -> "RatInterval":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "RatInterval":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "RatInterval":
        o = _coerce(other)
        products = (
            self.lo * o.lo,
            self.lo * o.hi,
            self.hi * o.lo,
            self.hi * o.hi,
        )
        return RatInterval(min(products), max(products))

    __rmul__ = __mul__

    def inverse(self) -> "RatInterval":
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError(f"interval {self!r} contains zero")
        return RatInterval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other) -> "RatInterval":
        return self * _coerce(other).inverse()

    def __rtruediv__(self, other) -> "RatInterval":
        return _coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "RatInterval":
        if not isinstance(k, int):
            raise TypeError("only integer powers are supported")
        if k < 0:
            return (self ** (-k)).inverse()
        if k == 0:
            return RatInterval.point(1)
        lo_p, hi_p = self.lo**k, self.hi**k
        if k % 2 == 1 or self.lo >= 0:
            return RatInterval(lo_p, hi_p)
        if self.hi <= 0:
            return RatInterval(hi_p, lo_p)
        # even power of a sign-straddling interval
        return RatInterval(Fraction(0), max(lo_p, hi_p))

    def __abs__(self) -> "RatInterval":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return RatInterval(Fraction(0), max(-self.lo, self.hi))

    # -- bit-size control ----------------------------------------------------

    def rounded(self, bits: int) -> "RatInterval":
        """Outward round endpoints to dyadics of about ``bits`` bits."""
        return RatInterval(
            round_frac(self.lo, bits, up=False),
            round_frac(self.hi, bits, up=True),
        )


def _coerce(value) -> RatInterval:
    if isinstance(value, RatInterval):
        return value
    return RatInterval.point(value)


# Comparison helpers used by every inequality verdict.  "lt" is certified
# strict less-than; the Fails branch certifies the complement (>=).

def compare_lt(a: RatInterval, b: RatInterval) -> "bool | None":
    """True if a < b certainly, False if a >= b certainly, None if unknown."""
    if a.hi < b.lo:
        return True
    if a.lo >= b.hi:
        return False
    return None
