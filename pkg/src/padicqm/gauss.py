"""Gauss integrals over Q_v and their independent numerical oracles.

The closed form of the quadratic character integral over a completion,

    integral of chi_v(a x^2 + b x) dx  =  lambda_v(a) |2a|_v^{-1/2} chi_v(-b^2/4a),

is evaluated exactly.  Its ball-restricted p-adic version reduces to
complete quadratic Gauss sums modulo p^L, also evaluated exactly.  Two
numerical oracles check both: a Haar-measure coset enumeration over
p-adic balls and a damped Fresnel quadrature at the real place.
"""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .characters import Amplitude, Phase, chi, lambda_v, legendre
from .errors import DegenerateQuadraticError, OracleCapError, QuadratureError
from .places import (
    INFINITE_VALUATION,
    Place,
    _residue,
    fractional_part,
    is_prime,
    valuation,
)

DEFAULT_COSET_CAP = 10**6
_CAP_ENV_VAR = "PADICQM_COSET_CAP"


def coset_cap() -> int:
    """Active coset cap: environment override or the 10^6 default."""
    raw = os.environ.get(_CAP_ENV_VAR)
    return int(raw) if raw else DEFAULT_COSET_CAP


@dataclass(frozen=True)
class BallSpec:
    """A p-adic ball |x|_p <= p^N partitioned into cosets of p^M Z_p.

    The partition has p^(N+M) cosets, each of Haar measure p^(-M).
    """

    prime: int
    radius_exponent: int
    resolution_exponent: int

    def __post_init__(self):
        if not is_prime(self.prime):
            raise ValueError(f"not a prime: {self.prime}")
        if self.resolution_exponent < -self.radius_exponent:
            raise ValueError("resolution must be at least as fine as the ball")

    @property
    def n_cosets(self) -> int:
        return self.prime ** (self.radius_exponent + self.resolution_exponent)

    def representatives(self):
        """Coset representatives sum(x_i p^i, -N <= i < M), ascending."""
        scale = Fraction(self.prime) ** (-self.radius_exponent)
        for r in range(self.n_cosets):
            yield r * scale


def gauss_full(place: Place, a: Fraction | int, b: Fraction | int = 0) -> Amplitude:
    """Closed form of the full-line Gauss integral over Q_v.

    Requires a != 0; the degenerate linear case belongs to the ball
    integrals below.
    """
    a, b = Fraction(a), Fraction(b)
    if a == 0:
        raise DegenerateQuadraticError(
            "quadratic coefficient is zero; use quad_char_integral_ball"
        )
    from .places import norm

    modulus_sq = 1 / norm(2 * a, place)
    phase = lambda_v(place, a) + chi(place, -b * b / (4 * a))
    return Amplitude(modulus_sq, phase)


def _complete_gauss_sum(a: int, b: int, p: int, L: int) -> Amplitude:
    """Exact value of sum over x mod p^L of exp(2 pi i (a x^2 + b x)/p^L).

    Classical case analysis: strip common p powers, then complete the
    square; the unit-coefficient pure sums are p^{L/2} (even L) and
    Legendre-twisted quadratic Gauss sums (odd L); p = 2 contributes
    eighth roots of unity.  Evaluated without the lambda machinery so it
    serves as an independent route to the same values.
    """
    if L == 0:
        return Amplitude.one()
    mod = p**L
    a %= mod
    b %= mod
    if a == 0:
        if b == 0:
            return Amplitude(Fraction(mod) ** 2, Phase())
        return Amplitude.zero()
    j = 0
    aj = a
    while aj % p == 0:
        aj //= p
        j += 1
    if j > 0:
        if b % p**j != 0:
            return Amplitude.zero()
        inner = _complete_gauss_sum(aj, b // p**j, p, L - j)
        return Amplitude(Fraction(p) ** (2 * j), Phase()) * inner
    # now p does not divide a
    if p != 2:
        c = (-b * b * pow(4 * a, -1, mod)) % mod
        shift = Phase(Fraction(c, mod))
        if L % 2 == 0:
            return Amplitude(Fraction(mod), shift)
        eps = legendre(a, p)
        if p % 4 == 1:
            quarter = Fraction(0) if eps == 1 else Fraction(1, 2)
        else:
            quarter = Fraction(1, 4) if eps == 1 else Fraction(3, 4)
        return Amplitude(Fraction(mod), shift + Phase(quarter))
    # p = 2, a odd
    if L == 1:
        return Amplitude(Fraction(4), Phase()) if b % 2 == 1 else Amplitude.zero()
    if b % 2 == 1:
        return Amplitude.zero()
    b2 = b // 2
    c = (-b2 * b2 * pow(a, -1, mod)) % mod
    shift = Phase(Fraction(c, mod))
    if L % 2 == 0:
        eighth = Fraction(1, 8) if a % 4 == 1 else Fraction(7, 8)
    else:
        eighth = Fraction(a % 8, 8)
    return Amplitude(Fraction(2 * mod), shift + Phase(eighth))


def minimal_resolution(p: int, alpha: Fraction, beta: Fraction, N: int) -> int:
    """Smallest M making chi_p(alpha x^2 + beta x) constant on cosets.

    Constancy on x + p^M Z_p for every |x|_p <= p^N requires
    |2 alpha x + beta|_p <= p^M over the ball and |alpha|_p <= p^{2M}.
    """
    v2 = 1 if p == 2 else 0
    bounds = [-N]
    if alpha != 0:
        va = valuation(alpha, p)
        bounds.append(math.ceil(-va / 2))
        bounds.append(N - v2 - va)
    if beta != 0:
        bounds.append(-valuation(beta, p))
    return max(bounds)


def quad_char_integral_ball(
    p: int, alpha: Fraction | int, beta: Fraction | int, N: int
) -> Amplitude:
    """Exact integral of chi_p(alpha x^2 + beta x) over the ball |x|_p <= p^N.

    At resolution M the integrand is constant on each coset, so the
    integral is the measure-weighted coset sum; substituting x = r/p^N
    turns that sum into a complete quadratic Gauss sum mod p^L, where
    p^L is the common denominator of the coset phases.  The value is
    then p^{N-L} times the complete sum -- exact for every input.
    """
    if not is_prime(p):
        raise ValueError(f"not a prime: {p}")
    alpha, beta = Fraction(alpha), Fraction(beta)
    s1 = 0
    if alpha != 0:
        s1 = max(0, 2 * N - valuation(alpha, p))
    s2 = 0
    if beta != 0:
        s2 = max(0, N - valuation(beta, p))
    L = max(s1, s2)
    if L == 0:
        # integrand is identically 1 on the ball; value = measure = p^N
        return Amplitude(Fraction(p) ** (2 * N), Phase())
    mod = p**L
    a_int = _residue(alpha * Fraction(p) ** (L - 2 * N), mod, p) if alpha else 0
    b_int = _residue(beta * Fraction(p) ** (L - N), mod, p) if beta else 0
    g = _complete_gauss_sum(a_int, b_int, p, L)
    scale = Amplitude(Fraction(p) ** (2 * (N - L)), Phase())
    return scale * g


def stabilization_threshold(p: int, alpha: Fraction, beta: Fraction) -> int:
    """Ball radius exponent beyond which the ball integral equals the full one.

    Sufficient bound: the ball must contain the critical point -beta/2alpha
    and the concentration scale |2 alpha|^{-1/2}.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    if alpha == 0:
        raise DegenerateQuadraticError("threshold defined for quadratic phases only")
    v2 = 1 if p == 2 else 0
    va = valuation(alpha, p)
    candidates = [math.ceil((v2 + va + 1) / 2)]
    if beta != 0:
        candidates.append(v2 + va - valuation(beta, p))
    return max(candidates)


def quadratic_char_fn(
    p: int, alpha: Fraction, beta: Fraction
) -> Callable[[Fraction], complex]:
    """Float-valued chi_p(alpha x^2 + beta x), for feeding the Haar oracle."""
    alpha, beta = Fraction(alpha), Fraction(beta)

    def f(x: Fraction) -> complex:
        q = fractional_part(alpha * x * x + beta * x, p)
        return cmath.exp(2j * math.pi * float(q))

    return f


def _pairwise_sum(values: list[complex], lo: int, hi: int) -> complex:
    """Fixed pairwise summation tree; independent of any partitioning."""
    n = hi - lo
    if n <= 4:
        total = 0j
        for i in range(lo, hi):
            total += values[i]
        return total
    mid = lo + n // 2
    return _pairwise_sum(values, lo, mid) + _pairwise_sum(values, mid, hi)


def haar_oracle(
    p: int,
    f: Callable[[Fraction], complex],
    ball: BallSpec,
    cap: int | None = None,
) -> complex:
    """Numerical Haar integral of f over the ball by coset enumeration.

    Evaluates f at every coset representative and weights by the coset
    measure p^{-M}.  Deterministic: fixed enumeration order and a fixed
    pairwise-summation tree.
    """
    if ball.prime != p:
        raise ValueError("ball prime disagrees with p")
    limit = cap if cap is not None else coset_cap()
    if ball.n_cosets > limit:
        raise OracleCapError(
            f"{ball.n_cosets} cosets exceed the cap of {limit}"
        )
    values = [f(r) for r in ball.representatives()]
    total = _pairwise_sum(values, 0, len(values))
    return total * float(p) ** (-ball.resolution_exponent)


def fresnel_oracle(
    a: Fraction | float, b: Fraction | float, damping: float
) -> complex:
    """Damped real-place Gauss integral by quadrature.

    Evaluates integral of exp(-2 pi i (a x^2 + b x)) exp(-damping x^2) dx.
    The |x| <= 1 core is integrated directly; each tail is mapped by
    u = x^2 onto a Fourier-type integral handled by the oscillatory-
    weight quadrature, which remains accurate for thousands of cycles.
    """
    from scipy.integrate import quad

    a_f, b_f, d = float(a), float(b), float(damping)
    if a_f == 0:
        raise DegenerateQuadraticError("quadratic coefficient is zero")
    if d <= 0:
        raise ValueError("damping must be positive")

    def core_re(x: float) -> float:
        return math.exp(-d * x * x) * math.cos(2 * math.pi * (a_f * x * x + b_f * x))

    def core_im(x: float) -> float:
        return -math.exp(-d * x * x) * math.sin(2 * math.pi * (a_f * x * x + b_f * x))

    core_r, err_r = quad(core_re, -1.0, 1.0, epsabs=1e-12, epsrel=1e-12, limit=400)
    core_i, err_i = quad(core_im, -1.0, 1.0, epsabs=1e-12, epsrel=1e-12, limit=400)

    # Both tails together: integral over u >= 1 of
    # exp(-d u) cos(2 pi b sqrt(u)) / sqrt(u) * exp(-2 pi i a u) du.
    def g(u: float) -> float:
        return math.exp(-d * u) * math.cos(2 * math.pi * b_f * math.sqrt(u)) / math.sqrt(u)

    omega = 2 * math.pi * abs(a_f)
    tail_cos, err_c = quad(g, 1.0, math.inf, weight="cos", wvar=omega, limit=4000)
    tail_sin, err_s = quad(g, 1.0, math.inf, weight="sin", wvar=omega, limit=4000)
    if max(err_r, err_i, err_c, err_s) > 1e-7:
        raise QuadratureError("oscillatory quadrature failed to converge")
    sign = 1.0 if a_f > 0 else -1.0
    return complex(core_r + tail_cos, core_i - sign * tail_sin)


def fresnel_limit(
    a: Fraction | float,
    b: Fraction | float,
    dampings: tuple[float, ...] = (1e-1, 1e-2, 1e-3),
) -> complex:
    """Zero-damping extrapolation of the Fresnel quadrature.

    Polynomial (Neville) extrapolation in the damping parameter over the
    given decreasing sequence; advisory accuracy about 1e-6.
    """
    xs = [float(d) for d in dampings]
    ys = [fresnel_oracle(a, b, d) for d in xs]
    n = len(xs)
    table = list(ys)
    for level in range(1, n):
        for i in range(n - level):
            table[i] = table[i + 1] + (table[i + 1] - table[i]) * xs[i + level] / (
                xs[i] - xs[i + level]
            )
    return table[0]
