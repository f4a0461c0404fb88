"""p-Adic analytic functions with rigorous finite-precision tracking.

Values are :class:`PadicTruncation` objects: an element of Q_p known
modulo p^P.  Arithmetic propagates precision pessimistically, so a
result's stated precision is never better than what the inputs justify.
Trigonometric series converge for |x|_p <= 1/p (odd p) and <= 1/4
(p = 2); square roots are lifted digit by digit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .characters import Phase, legendre
from .errors import DomainError, NonSquareError, PrecisionError
from .places import Place, _residue, is_prime, valuation


def _strip(n: int, p: int) -> tuple[int, int]:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


@dataclass(frozen=True)
class PadicTruncation:
    """A p-adic number known modulo p^precision.

    Nonzero values are stored as p^valuation * mantissa with the mantissa
    a unit modulo p^(precision - valuation).  A value indistinguishable
    from zero at this precision has mantissa 0 and valuation None.
    """

    prime: int
    valuation: int | None
    mantissa: int
    precision: int

    @classmethod
    def _make(cls, p: int, v: int, m: int, P: int) -> PadicTruncation:
        if v >= P or m % p ** (P - v) == 0:
            return cls(p, None, 0, P)
        shift, m = _strip(m, p)
        v += shift
        if v >= P:
            return cls(p, None, 0, P)
        return cls(p, v, m % p ** (P - v), P)

    @classmethod
    def zero_mod(cls, p: int, P: int) -> PadicTruncation:
        return cls(p, None, 0, P)

    @classmethod
    def from_rational(cls, x: Fraction | int, p: int, P: int) -> PadicTruncation:
        x = Fraction(x)
        if x == 0:
            return cls.zero_mod(p, P)
        v = valuation(x, p)
        if v >= P:
            return cls.zero_mod(p, P)
        unit = x * Fraction(p) ** (-v)
        m = _residue(unit, p ** (P - v), p)
        return cls(p, v, m, P)

    @property
    def is_zero_mod(self) -> bool:
        return self.valuation is None

    @property
    def digits(self) -> tuple[int, ...]:
        """Known canonical digits, from index valuation upward."""
        if self.is_zero_mod:
            return ()
        out, m = [], self.mantissa
        for _ in range(self.precision - self.valuation):
            m, d = divmod(m, self.prime)
            out.append(d)
        return tuple(out)

    def representative(self) -> Fraction:
        """A rational congruent to the value modulo p^precision."""
        if self.is_zero_mod:
            return Fraction(0)
        return Fraction(self.mantissa) * Fraction(self.prime) ** self.valuation

    def norm(self) -> Fraction:
        if self.is_zero_mod:
            raise PrecisionError(
                f"norm not pinned: value is O({self.prime}^{self.precision})"
            )
        return Fraction(1, self.prime) ** self.valuation

    def agrees_with(self, other: PadicTruncation, modulo: int) -> bool:
        """True when both values coincide modulo p^modulo."""
        diff = self - other
        return diff.is_zero_mod or diff.valuation >= modulo

    def __neg__(self) -> PadicTruncation:
        if self.is_zero_mod:
            return self
        return PadicTruncation._make(
            self.prime, self.valuation, -self.mantissa, self.precision
        )

    def __add__(self, other: PadicTruncation) -> PadicTruncation:
        p = self.prime
        P = min(self.precision, other.precision)
        if self.is_zero_mod and other.is_zero_mod:
            return PadicTruncation.zero_mod(p, P)
        if self.is_zero_mod:
            return PadicTruncation._make(p, other.valuation, other.mantissa, P)
        if other.is_zero_mod:
            return PadicTruncation._make(p, self.valuation, self.mantissa, P)
        v = min(self.valuation, other.valuation)
        m = self.mantissa * p ** (self.valuation - v) + other.mantissa * p ** (
            other.valuation - v
        )
        return PadicTruncation._make(p, v, m, P)

    def __sub__(self, other: PadicTruncation) -> PadicTruncation:
        return self + (-other)

    def __mul__(self, other: PadicTruncation) -> PadicTruncation:
        p = self.prime
        if self.is_zero_mod or other.is_zero_mod:
            # O(p^P1) * (p^v2 unit) = O(p^(P1+v2)); O * O = O(p^(P1+P2))
            v1 = self.precision if self.is_zero_mod else self.valuation
            v2 = other.precision if other.is_zero_mod else other.valuation
            return PadicTruncation.zero_mod(p, v1 + v2)
        P = min(self.valuation + other.precision, other.valuation + self.precision)
        return PadicTruncation._make(
            p, self.valuation + other.valuation, self.mantissa * other.mantissa, P
        )

    def __truediv__(self, other: PadicTruncation) -> PadicTruncation:
        p = self.prime
        if other.is_zero_mod:
            raise PrecisionError("division by a value not pinned away from zero")
        if self.is_zero_mod:
            return PadicTruncation.zero_mod(p, self.precision - other.valuation)
        v = self.valuation - other.valuation
        P = min(
            self.precision - other.valuation,
            other.precision + self.valuation - 2 * other.valuation,
        )
        k = P - v
        inv = pow(other.mantissa, -1, p**k)
        return PadicTruncation._make(p, v, self.mantissa * inv % p**k, P)

    def scale(self, c: Fraction | int) -> PadicTruncation:
        """Multiply by an exact rational (no precision loss beyond the shift)."""
        c = Fraction(c)
        p = self.prime
        if c == 0:
            # exact zero: effectively infinite precision
            return PadicTruncation.zero_mod(p, 10**9)
        vc = valuation(c, p)
        if self.is_zero_mod:
            return PadicTruncation.zero_mod(p, self.precision + vc)
        v = self.valuation + vc
        P = self.precision + vc
        unit = c * Fraction(p) ** (-vc)
        m = self.mantissa * _residue(unit, p ** (P - v), p)
        return PadicTruncation._make(p, v, m, P)

    def __str__(self) -> str:
        if self.is_zero_mod:
            return f"O({self.prime}^{self.precision})"
        terms = " + ".join(
            f"{d}*{self.prime}^{i}" if i else str(d)
            for i, d in enumerate(self.digits)
            if d
        )
        return (
            f"{self.prime}^{self.valuation}*({terms or '0'})"
            f" + O({self.prime}^{self.precision})"
        )


def chi_of_truncation(t: PadicTruncation) -> Phase:
    """Additive-character phase of a truncated value.

    The fractional part depends only on digits below p^0, so it is
    pinned exactly once the precision reaches 0.
    """
    if t.precision < 0:
        raise PrecisionError("precision below p^0: fractional part not pinned")
    if t.is_zero_mod or t.valuation >= 0:
        return Phase()
    p_pow = t.prime ** (-t.valuation)
    return Phase(Fraction(t.mantissa % p_pow, p_pow))


def lambda_of_truncation(place: Place, t: PadicTruncation) -> Phase:
    """Lambda factor of a truncated value; needs enough pinned digits."""
    from .characters import lambda_v

    p = place.p
    if t.is_zero_mod:
        raise PrecisionError("lambda factor needs a value pinned away from zero")
    need = 3 if p == 2 else 1
    if t.precision - t.valuation < need:
        raise PrecisionError(f"need {need} digits above the valuation")
    return lambda_v(place, t.representative())


def series_eval(
    coefficients: Iterable[Fraction],
    x: Fraction | int,
    p: int,
    target_precision: int,
    terms: int | None = None,
) -> PadicTruncation:
    """Evaluate sum of c_k x^k as a truncation correct modulo p^P.

    When ``terms`` is given the caller guarantees the discarded tail has
    norm <= p^(-P) and exactly that many terms are summed.  Otherwise
    summation stops after four consecutive terms of norm <= p^(-P-2);
    eight consecutive nonzero terms without valuation growth raise a
    divergence error.
    """
    if not is_prime(p):
        raise ValueError(f"not a prime: {p}")
    x = Fraction(x)
    P = target_precision
    total = Fraction(0)
    if x == 0:
        for c in coefficients:
            total = Fraction(c)
            break
        return PadicTruncation.from_rational(total, p, P)

    small_run = 0
    window: list[int | float] = []
    xk = Fraction(1)
    for k, c in enumerate(coefficients):
        if terms is not None and k >= terms:
            break
        term = Fraction(c) * xk
        xk *= x
        total += term
        if term == 0:
            continue
        v = valuation(term, p)
        if terms is None:
            window.append(v)
            if len(window) > 8:
                window.pop(0)
                if window[-1] <= window[0]:
                    raise DomainError("term norms are not decreasing: series diverges")
            small_run = small_run + 1 if v >= P + 2 else 0
            if small_run >= 4:
                break
        if terms is None and k > 10_000:
            raise DomainError("series failed to converge within 10000 terms")
    return PadicTruncation.from_rational(total, p, P)


def _trig_domain_valuation(x: Fraction, p: int) -> int:
    d = valuation(x, p)
    minimum = 2 if p == 2 else 1
    if d is math.inf or d >= minimum:
        return minimum if d is math.inf else d
    raise DomainError(
        f"|x|_{p} must be <= {p}^-{minimum} for trigonometric series"
    )


def _trig_term_count(d: int, p: int, P: int) -> int:
    # v(x^k / k!) >= k*d - (k-1)/(p-1) >= P once k passes this bound.
    num = P * (p - 1) - 1
    den = d * (p - 1) - 1
    return max(1, math.ceil(num / den) + 1)


def _sin_cos_sums(x: Fraction, p: int, P: int) -> tuple[Fraction, Fraction]:
    """Exact partial sums of sin and cos whose tails have norm <= p^-P."""
    d = _trig_domain_valuation(x, p)
    K = _trig_term_count(d, p, P)
    sin_total, cos_total = Fraction(0), Fraction(0)
    term = Fraction(1)  # x^k / k!
    for k in range(K + 2):
        if k:
            term = term * x / k
        if k % 2 == 0:
            cos_total += -term if k % 4 else term
        else:
            sin_total += -term if (k - 1) % 4 else term
    return sin_total, cos_total


def sin_p(x: Fraction | int, p: int, P: int) -> PadicTruncation:
    """p-Adic sine by its Taylor series, correct modulo p^P."""
    x = Fraction(x)
    if x == 0:
        return PadicTruncation.zero_mod(p, P)
    s, _ = _sin_cos_sums(x, p, P)
    return PadicTruncation.from_rational(s, p, P)


def cos_p(x: Fraction | int, p: int, P: int) -> PadicTruncation:
    """p-Adic cosine by its Taylor series, correct modulo p^P."""
    x = Fraction(x)
    if x == 0:
        return PadicTruncation.from_rational(1, p, P)
    _, c = _sin_cos_sums(x, p, P)
    return PadicTruncation.from_rational(c, p, P)


def tan_p(x: Fraction | int, p: int, P: int) -> PadicTruncation:
    """p-Adic tangent: sin/cos with cos a unit throughout the domain."""
    x = Fraction(x)
    if x == 0:
        return PadicTruncation.zero_mod(p, P)
    s, c = _sin_cos_sums(x, p, P)
    return PadicTruncation.from_rational(s / c, p, P)


def _sqrt_unit_odd(u0: int, p: int) -> int:
    """Square root mod an odd prime by Tonelli-Shanks."""
    if p % 4 == 3:
        return pow(u0, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(u0, q, p), pow(u0, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


def sqrt_p(x: Fraction | int, p: int, P: int) -> PadicTruncation:
    """Canonical square root in Q_p, correct modulo p^P.

    Exists when the valuation is even and the unit part is a square:
    a quadratic-residue leading digit for odd p, or a unit = 1 mod 8
    for p = 2.  Of the two roots the canonical one comes first in the
    digit order (smaller leading digit for odd p; second digit 0 for
    p = 2, where both roots lead with 1).
    """
    x = Fraction(x)
    if x == 0:
        raise ValueError("square root of zero is trivial; argument must be nonzero")
    v = valuation(x, p)
    if v % 2 != 0:
        raise NonSquareError(f"odd valuation {v}: no square root in Q_{p}")
    unit = x * Fraction(p) ** (-v)
    half_v = v // 2
    k = max(1, P - half_v)
    target = _residue(unit, p ** (k + 2), p)
    if p != 2:
        u0 = target % p
        if legendre(u0, p) != 1:
            raise NonSquareError(f"leading digit {u0} is not a residue mod {p}")
        y = _sqrt_unit_odd(u0, p)
        mod = p
        while mod < p**k:
            mod = min(mod * mod, p**k)
            # Newton step: y <- (y + u/y) / 2 modulo the lifted modulus
            inv = pow(2 * y, -1, mod)
            y = (y + (target - y * y) * inv) % mod
        if (p - y) % p < y % p:
            y = (-y) % p**k
    else:
        if target % 8 != 1:
            raise NonSquareError("unit part is not 1 mod 8: no square root in Q_2")
        y, j = 1, 3
        while j < k + 2:
            if (y * y - target) % 2 ** (j + 1) != 0:
                y += 2 ** (j - 1)
            j += 1
        # canonical branch: digit above the leading 1 equals zero
        if y % 4 != 1:
            y = (-y) % 2**k
        y %= 2**k
    return PadicTruncation._make(p, half_v, y, half_v + k)
