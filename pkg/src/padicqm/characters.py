"""Exact unit-complex arithmetic: additive characters and lambda factors.

A :class:`Phase` is a rational q modulo 1 standing for exp(2*pi*i*q);
an :class:`Amplitude` is an exact squared modulus paired with a phase.
Every lambda value is an eighth root of unity, so the whole character
layer stays inside exact rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import PadicqmError
from .places import Place, digits, fractional_part, is_prime, valuation


@dataclass(frozen=True)
class Phase:
    """A rational modulo 1, denoting the unit complex number exp(2*pi*i*q)."""

    value: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value) % 1)

    def __add__(self, other: Phase) -> Phase:
        return Phase(self.value + other.value)

    def __sub__(self, other: Phase) -> Phase:
        return Phase(self.value - other.value)

    def __neg__(self) -> Phase:
        return Phase(-self.value)

    def __mul__(self, k: int) -> Phase:
        return Phase(self.value * k)

    __rmul__ = __mul__

    def to_complex(self) -> complex:
        return complex(
            math.cos(2 * math.pi * float(self.value)),
            math.sin(2 * math.pi * float(self.value)),
        )

    def __str__(self) -> str:
        return str(self.value)


ZERO_PHASE = Phase(Fraction(0))


@dataclass(frozen=True)
class Amplitude:
    """Exact polar complex value: squared modulus and phase.

    The zero amplitude is canonical: modulus_sq = 0 forces phase 0.
    """

    modulus_sq: Fraction = Fraction(1)
    phase: Phase = field(default_factory=Phase)

    def __post_init__(self):
        ms = Fraction(self.modulus_sq)
        if ms < 0:
            raise ValueError("modulus_sq must be nonnegative")
        object.__setattr__(self, "modulus_sq", ms)
        if ms == 0:
            object.__setattr__(self, "phase", ZERO_PHASE)

    @classmethod
    def zero(cls) -> Amplitude:
        return cls(Fraction(0))

    @classmethod
    def one(cls) -> Amplitude:
        return cls(Fraction(1))

    @property
    def is_zero(self) -> bool:
        return self.modulus_sq == 0

    def __mul__(self, other: Amplitude) -> Amplitude:
        return Amplitude(self.modulus_sq * other.modulus_sq, self.phase + other.phase)

    def conjugate(self) -> Amplitude:
        return Amplitude(self.modulus_sq, -self.phase)

    def render(self) -> tuple[float, float]:
        """Float (re, im); relative error <= 1e-12."""
        r = math.sqrt(float(self.modulus_sq))
        return (
            r * math.cos(2 * math.pi * float(self.phase.value)),
            r * math.sin(2 * math.pi * float(self.phase.value)),
        )

    def to_complex(self) -> complex:
        re, im = self.render()
        return complex(re, im)

    def __str__(self) -> str:
        return f"|.|^2={self.modulus_sq}, phase={self.phase}"


def amp_mul(a: Amplitude, b: Amplitude) -> Amplitude:
    return a * b


def amp_render(a: Amplitude) -> tuple[float, float]:
    return a.render()


def chi(place: Place, x: Fraction | int) -> Phase:
    """Additive character of the place, as an exact phase.

    Real place: exp(-2*pi*i*x), i.e. phase -x mod 1.  p-Adic place:
    exp(2*pi*i*{x}_p) with {x}_p the p-adic fractional part.
    """
    x = Fraction(x)
    if place.is_real:
        return Phase(-x)
    return Phase(fractional_part(x, place.p))


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, +1}, by Euler's criterion."""
    if p == 2 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def legendre_bruteforce(a: int, p: int) -> int:
    """O(p) residue-set oracle for the Legendre symbol (test cross-check)."""
    if p == 2 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    if a % p == 0:
        return 0
    residues = {x * x % p for x in range(1, p)}
    return 1 if a % p in residues else -1


def lambda_v(place: Place, a: Fraction | int) -> Phase:
    """The arithmetic eighth-root-of-unity factor of the Gauss integral.

    Real place: (1 - i*sign a)/sqrt(2), i.e. phase 7/8 for a > 0 and 1/8
    for a < 0.  Odd p: dispatch on the parity of v_p(a) and p mod 4 via
    the Legendre symbol of the leading digit.  p = 2: dispatch on the
    parity of v_2(a) via digits a_1, a_2 of the unit part.

    Rejects a = 0: the factor is defined only for nonzero arguments.
    """
    a = Fraction(a)
    if a == 0:
        raise ValueError("lambda factor undefined at zero")
    if place.is_real:
        return Phase(Fraction(7, 8)) if a > 0 else Phase(Fraction(1, 8))
    p = place.p
    v = valuation(a, p)
    if p != 2:
        if v % 2 == 0:
            return ZERO_PHASE
        a0 = digits(a, p, 1).digits[0]
        eps = legendre(a0, p)
        if p % 4 == 1:
            return Phase(Fraction(0 if eps == 1 else 1, 2))
        # p = 3 mod 4: value i*(a0/p)
        return Phase(Fraction(1, 4)) if eps == 1 else Phase(Fraction(3, 4))
    d = digits(a, 2, 3).digits
    a1, a2 = d[1], d[2]
    # (1 + (-1)**a1 * i)/sqrt(2) is the eighth root of unity +-1/8.
    base = Fraction(1, 8) if a1 == 0 else Fraction(7, 8)
    if v % 2 == 0:
        return Phase(base)
    flip = Fraction(1, 2) if (a1 + a2) % 2 == 1 else Fraction(0)
    return Phase(base + flip)


def lambda_to_complex(place: Place, a: Fraction | int) -> complex:
    return lambda_v(place, a).to_complex()


def assert_eighth_root(ph: Phase) -> None:
    """Raise unless the phase is an eighth root of unity."""
    if (ph.value * 8).denominator != 1:
        raise PadicqmError(f"phase {ph} is not an eighth root of unity")
