"""Exact rational scalars over every completion of Q.

A *place* selects a completion of the rationals: the real absolute value
or the p-adic norm for a prime p.  All quantities here are exact
``fractions.Fraction`` values; norms are returned as exact rationals
(p raised to an integer power), never as floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ZeroExpansionError

#: Sentinel returned by :func:`valuation` at zero.
INFINITE_VALUATION = math.inf

# Deterministic Miller-Rabin witness set, proven complete for
# n < 3_317_044_064_679_887_385_961_981.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@lru_cache(maxsize=4096)
def is_prime(n: int) -> bool:
    """Deterministic primality check (Miller-Rabin, fixed witnesses)."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == small:
            return True
        if n % small == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True, order=False)
class Place:
    """A completion of Q: the real place or a p-adic place.

    ``p`` is ``None`` for the real place and a verified prime otherwise.
    """

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"not a prime: {self.p}")

    @classmethod
    def real(cls) -> Place:
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> Place:
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> Place:
        """Parse ``"inf"`` (or ``"real"``) or a prime integer string."""
        text = text.strip()
        if text in ("inf", "real", "oo"):
            return cls.real()
        return cls.prime(int(text))

    @property
    def is_real(self) -> bool:
        return self.p is None

    def __str__(self) -> str:
        return "inf" if self.p is None else str(self.p)


@dataclass(frozen=True)
class DigitExpansion:
    """Leading digits of the canonical p-adic expansion of a rational.

    Represents x = p**valuation * (d_0 + d_1 p + d_2 p**2 + ...) with
    d_0 != 0 and every digit in {0, ..., p-1}.
    """

    valuation: int
    digits: tuple[int, ...]
    prime: int

    def __post_init__(self):
        if not self.digits or self.digits[0] == 0:
            raise ValueError("canonical expansion must have a nonzero leading digit")
        if any(d < 0 or d >= self.prime for d in self.digits):
            raise ValueError("digit out of range")

    def partial_sum(self) -> Fraction:
        """Rational value of the stored digits: p**v * sum d_i p**i."""
        total = sum(d * self.prime**i for i, d in enumerate(self.digits))
        return Fraction(total) * Fraction(self.prime) ** self.valuation

    def __str__(self) -> str:
        body = " + ".join(
            f"{d}*{self.prime}^{self.valuation + i}" for i, d in enumerate(self.digits)
        )
        return body


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation(x: Fraction | int, p: int) -> int | float:
    """Exponent of p in x; +inf for x = 0.

    x = p**v * (a/b) with p dividing neither a nor b.
    """
    if not is_prime(p):
        raise ValueError(f"not a prime: {p}")
    x = Fraction(x)
    if x == 0:
        return INFINITE_VALUATION
    return _int_valuation(x.numerator, p) - _int_valuation(x.denominator, p)


def norm(x: Fraction | int, place: Place) -> Fraction:
    """Exact norm of x at the given place: |x| or p**(-v_p(x)); 0 at x = 0."""
    x = Fraction(x)
    if place.is_real:
        return abs(x)
    if x == 0:
        return Fraction(0)
    v = valuation(x, place.p)
    return Fraction(place.p) ** (-v)


def _unit_part(x: Fraction, p: int) -> tuple[int, Fraction]:
    """Split nonzero x as p**v * u with u a p-adic unit; returns (v, u)."""
    v = valuation(x, p)
    return v, x * Fraction(p) ** (-v)


def _residue(q: Fraction, modulus: int, p: int) -> int:
    """Representative of a p-integral rational q modulo p**k (modulus = p**k)."""
    if modulus == 1:
        return 0
    if q.denominator % p == 0:
        raise ValueError("rational is not p-integral")
    return q.numerator * pow(q.denominator, -1, modulus) % modulus


def digit(x: Fraction, p: int, index: int) -> int:
    """Digit d_index of the canonical expansion of nonzero x."""
    if x == 0:
        raise ZeroExpansionError("zero has no canonical expansion")
    _, u = _unit_part(x, p)
    r = _residue(u, p ** (index + 1), p)
    return (r // p**index) % p


def digits(x: Fraction | int, p: int, count: int) -> DigitExpansion:
    """First ``count`` canonical digits of x, by exact residue extraction.

    Raises :class:`ZeroExpansionError` at x = 0: the zero element has no
    canonical expansion.
    """
    if count < 1:
        raise ValueError("count must be positive")
    x = Fraction(x)
    if x == 0:
        raise ZeroExpansionError("zero has no canonical expansion")
    v, u = _unit_part(x, p)
    out = []
    for _ in range(count):
        d = _residue(u, p, p)
        out.append(d)
        u = (u - d) / p
    return DigitExpansion(valuation=v, digits=tuple(out), prime=p)


def fractional_part(x: Fraction | int, p: int) -> Fraction:
    """p-Adic fractional part: the negative-power tail of the expansion.

    A rational in [0, 1) with a p-power denominator; x minus the result
    is p-integral.  Zero whenever |x|_p <= 1.
    """
    x = Fraction(x)
    if x == 0:
        return Fraction(0)
    v = valuation(x, p)
    if v >= 0:
        return Fraction(0)
    m = p ** (-v)
    # x = n / (d * p^{-v}) with p not dividing d; the tail is
    # (n * d^{-1} mod p^{-v}) / p^{-v}.
    d_coprime = x.denominator // m
    r = x.numerator * pow(d_coprime, -1, m) % m
    return Fraction(r, m)


def linear_less(x: Fraction | int, y: Fraction | int, p: int) -> bool:
    """Strict linear order on Q inside Q_p.

    x < y when |x|_p < |y|_p, or the norms tie and the first differing
    canonical digit of x is smaller.  The first differing digit index is
    v_p(x - y) - v_p(x), so no digit scan is needed.
    """
    x, y = Fraction(x), Fraction(y)
    if x == y:
        return False
    nx, ny = norm(x, Place.prime(p)), norm(y, Place.prime(p))
    if nx != ny:
        return nx < ny
    v_common = valuation(x, p)
    idx = valuation(x - y, p) - v_common
    return digit(x, p, idx) < digit(y, p, idx)


def real_abs_less(x: Fraction, y: Fraction) -> bool:
    """Ordinary strict order on Q, used at the real place."""
    return x < y


def place_less(x: Fraction, y: Fraction, place: Place) -> bool:
    """Strict order of the place: usual order at infinity, digit order at p."""
    if place.is_real:
        return real_abs_less(x, y)
    return linear_less(x, y, place.p)


def parse_rational(text: str) -> Fraction:
    """Parse "num/den" (den omitted when 1)."""
    return Fraction(text.strip())


def format_rational(x: Fraction) -> str:
    return str(x)
