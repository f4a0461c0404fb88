"""Closed-form quantum propagators over every completion of Q.

Kernels are exact :class:`Amplitude` values assembled from the norm,
the additive character and the lambda factor of the place; the symbolic
expression is the same for the real and all p-adic places.  Composition
over an intermediate point is performed symbolically (the intermediate
variable appears quadratically, so the Gauss closed form applies),
which makes the finite-partition path integral independent of the
partition -- exactly, coefficient by coefficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .analytic import (
    PadicTruncation,
    _sin_cos_sums,
    chi_of_truncation,
    lambda_of_truncation,
    sqrt_p,
)
from .characters import Amplitude, Phase, chi, lambda_v
from .dynamics import QuadraticActionForm, action_form_constant_field
from .errors import (
    DegenerateFormError,
    DegenerateIntervalError,
    PartitionError,
    PrecisionError,
    VerificationError,
)
from .gauss import quad_char_integral_ball
from .places import Place, norm, place_less


@dataclass(frozen=True)
class PartitionSpec:
    """Time points t_0 < t_1 < ... < t_N, strict in the place's order.

    The p-adic order is the digit order on Q_p; the real order is the
    usual one.  Strictness makes every subinterval length nonzero.
    """

    place: Place
    points: tuple[Fraction, ...]

    def __post_init__(self):
        pts = tuple(Fraction(t) for t in self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) < 2:
            raise PartitionError("a partition needs at least two points")
        for earlier, later in zip(pts, pts[1:]):
            if not place_less(earlier, later, self.place):
                raise PartitionError(
                    f"points not strictly increasing at the place: {earlier} !< {later}"
                )

    @property
    def n_steps(self) -> int:
        return len(self.points) - 1

    def step_lengths(self) -> tuple[Fraction, ...]:
        return tuple(b - a for a, b in zip(self.points, self.points[1:]))


@dataclass(frozen=True)
class SymbolicKernel:
    """A kernel prefactor * chi_v(-S(x1, x0)) with S an exact quadratic form.

    Supports exact composition over the shared endpoint; two kernels are
    equal exactly when prefactor and form coincide coefficient-wise.
    """

    place: Place
    prefactor: Amplitude
    form: QuadraticActionForm

    def evaluate(self, q0: Fraction, q1: Fraction) -> Amplitude:
        """Amplitude for propagation from q0 to q1."""
        ph = chi(self.place, -self.form.evaluate(Fraction(q1), Fraction(q0)))
        return self.prefactor * Amplitude(Fraction(1), ph)


def symbolic_constant_field_kernel(
    place: Place, a: Fraction | int, T: Fraction | int
) -> SymbolicKernel:
    a, T = Fraction(a), Fraction(T)
    if T == 0:
        raise DegenerateIntervalError("zero time interval")
    pref = Amplitude(1 / norm(T, place), lambda_v(place, 2 * T))
    return SymbolicKernel(place, pref, action_form_constant_field(a, T))


def compose_kernels(k2: SymbolicKernel, k1: SymbolicKernel) -> SymbolicKernel:
    """Integrate k2(q1, x) * k1(x, q0) over x, exactly.

    The x-dependence of the combined phase is quadratic, so the Gauss
    closed form applies; the result is again a symbolic kernel, with the
    lambda factors collapsing by the lambda product identities.
    """
    if k2.place != k1.place:
        raise ValueError("kernels live at different places")
    place = k2.place
    f2, f1 = k2.form, k1.form
    # chi argument of the product is -(f2(q1, x) + f1(x, q0)); collect in x.
    A = -(f2.beta + f1.alpha)
    if A == 0:
        raise DegenerateIntervalError("degenerate composition: quadratic term vanishes")
    # linear coefficient of x: u*q1 + w*q0 + s
    u, w, s = -f2.gamma, -f1.gamma, -(f2.epsilon + f1.delta)
    # Gauss integral over x contributes lambda(A) |2A|^{-1/2} chi(-B^2/4A).
    gauss_pref = Amplitude(1 / norm(2 * A, place), lambda_v(place, A))
    # New form: S'(q1, q0) = B^2/(4A) - C with C the x-free chi part,
    # -C = f2-part(q1) + f1-part(q0).
    inv4a = 1 / (4 * A)
    new_form = QuadraticActionForm(
        alpha=u * u * inv4a + f2.alpha,
        beta=w * w * inv4a + f1.beta,
        gamma=2 * u * w * inv4a,
        delta=2 * u * s * inv4a + f2.delta,
        epsilon=2 * w * s * inv4a + f1.epsilon,
        zeta=s * s * inv4a + f2.zeta + f1.zeta,
    )
    return SymbolicKernel(place, k2.prefactor * k1.prefactor * gauss_pref, new_form)


def compose(
    place: Place,
    a: Fraction | int,
    T1: Fraction | int,
    T2: Fraction | int,
) -> SymbolicKernel:
    """Exact two-step composition of constant-field kernels.

    Returns the symbolic kernel over the total time; by the composition
    law it equals the one-shot kernel with T = T1 + T2 coefficient-wise.
    """
    T1, T2 = Fraction(T1), Fraction(T2)
    if T1 == 0 or T2 == 0 or T1 + T2 == 0:
        raise DegenerateIntervalError("degenerate step or total time")
    return compose_kernels(
        symbolic_constant_field_kernel(place, a, T2),
        symbolic_constant_field_kernel(place, a, T1),
    )


def k_constant_field(
    place: Place,
    a: Fraction | int,
    T: Fraction | int,
    q0: Fraction | int,
    q1: Fraction | int,
) -> Amplitude:
    """Propagator of a particle in a constant field over time T.

    Modulus squared 1/|T|_v; phase lambda_v(2T) plus the character of
    minus the classical action.
    """
    a, T, q0, q1 = Fraction(a), Fraction(T), Fraction(q0), Fraction(q1)
    if T == 0:
        raise DegenerateIntervalError("zero time interval")
    s_cl = (q1 - q0) ** 2 / (2 * T) + a * (q1 + q0) * T / 2 - a * a * T**3 / 24
    return Amplitude(1 / norm(T, place), lambda_v(place, 2 * T) + chi(place, -s_cl))


def k_free(
    place: Place, T: Fraction | int, q0: Fraction | int, q1: Fraction | int
) -> Amplitude:
    """Free-particle propagator: the constant-field kernel at a = 0."""
    T, q0, q1 = Fraction(T), Fraction(q0), Fraction(q1)
    if T == 0:
        raise DegenerateIntervalError("zero time interval")
    return Amplitude(
        1 / norm(T, place),
        lambda_v(place, 2 * T) + chi(place, -((q1 - q0) ** 2) / (2 * T)),
    )


def k_desitter(
    place: Place,
    lam: Fraction | int,
    T: Fraction | int,
    q0: Fraction | int,
    q1: Fraction | int,
) -> Amplitude:
    """Minisuperspace cosmological propagator with cosmological constant lam."""
    lam, T, q0, q1 = Fraction(lam), Fraction(T), Fraction(q0), Fraction(q1)
    if T == 0:
        raise DegenerateIntervalError("zero time interval")
    arg = (
        (q1 - q0) ** 2 / (8 * T)
        + (lam * (q1 + q0) - 2) * T / 4
        - lam * lam * T**3 / 24
    )
    return Amplitude(1 / norm(4 * T, place), lambda_v(place, -2 * T) + chi(place, arg))


def desitter_action_form(lam: Fraction | int, T: Fraction | int) -> QuadraticActionForm:
    """Action form read back from the cosmological kernel's phase."""
    lam, T = Fraction(lam), Fraction(T)
    if T == 0:
        raise DegenerateIntervalError("zero time interval")
    return QuadraticActionForm(
        alpha=-1 / (8 * T),
        beta=-1 / (8 * T),
        gamma=1 / (4 * T),
        delta=-lam * T / 4,
        epsilon=-lam * T / 4,
        zeta=T / 2 + lam * lam * T**3 / 24,
    )


def k_general_quadratic(
    place: Place, form: QuadraticActionForm, x1: Fraction | int, x0: Fraction | int
) -> Amplitude:
    """Propagator from a quadratic classical action form.

    lambda_v(-2 gamma) |gamma|_v^{1/2} chi_v(-S(x1, x0)) with gamma the
    mixed partial of the form.
    """
    g = form.mixed_partial
    if g == 0:
        raise DegenerateFormError("mixed partial of the action form vanishes")
    return Amplitude(
        norm(g, place),
        lambda_v(place, -2 * g) + chi(place, -form.evaluate(Fraction(x1), Fraction(x0))),
    )


def finite_n_propagator(
    place: Place,
    a: Fraction | int,
    partition: PartitionSpec,
    q0: Fraction | int,
    q1: Fraction | int,
) -> Amplitude:
    """Finite-partition path integral for the constant-field system.

    Folds the exact Gauss composition over the subintervals, with the
    normalization prod lambda_v(2 eps_i) |eps_i|^{-1/2} built into each
    step kernel.  The result is independent of the partition and equals
    the one-shot kernel over the total time.
    """
    if partition.place != place:
        raise PartitionError("partition place disagrees with the requested place")
    steps = partition.step_lengths()
    kernel = symbolic_constant_field_kernel(place, a, steps[0])
    for eps in steps[1:]:
        kernel = compose_kernels(
            symbolic_constant_field_kernel(place, a, eps), kernel
        )
    return kernel.evaluate(Fraction(q0), Fraction(q1))


def semigroup_residual(
    place: Place,
    a: Fraction | int,
    t0: Fraction | int,
    t_mid: Fraction | int,
    t1: Fraction | int,
    q0: Fraction | int,
    q1: Fraction | int,
) -> Amplitude:
    """Composition over an intermediate time minus the one-shot kernel.

    The two agree exactly, so the residual is the canonical zero
    amplitude; a mismatch raises with the exact witness attached.
    """
    t0, t_mid, t1 = Fraction(t0), Fraction(t_mid), Fraction(t1)
    if t_mid == t0 or t1 == t_mid or t1 == t0:
        raise DegenerateIntervalError("intermediate time collides with an endpoint")
    composed = compose(place, a, t_mid - t0, t1 - t_mid).evaluate(q0, q1)
    direct = k_constant_field(place, a, t1 - t0, q0, q1)
    if composed == direct:
        return Amplitude.zero()
    raise VerificationError(
        "composition disagrees with the one-shot kernel",
        witness={
            "place": str(place),
            "a": str(a),
            "times": (str(t0), str(t_mid), str(t1)),
            "endpoints": (str(q0), str(q1)),
            "composed": str(composed),
            "direct": str(direct),
        },
    )


def overlap_ball_integral(
    p: int,
    a: Fraction | int,
    t: Fraction | int,
    t1: Fraction | int,
    x0: Fraction | int,
    x1: Fraction | int,
    N: int,
) -> Amplitude:
    """Pairing of two kernels sharing their source point, over a p-adic ball.

    Integrates conj(K(x1, t1; x, t)) * K(x0, t1; x, t) over |x|_p <= p^N.
    The quadratic parts cancel, leaving an exact linear character
    integral: zero for x1 != x0 once the ball is large enough, and the
    diverging mass p^N / |t1 - t|_p on the diagonal -- the ball pairing
    of a delta.
    """
    a, t, t1 = Fraction(a), Fraction(t), Fraction(t1)
    x0, x1 = Fraction(x0), Fraction(x1)
    tau = t1 - t
    if tau == 0:
        raise DegenerateIntervalError("coincident times: the pairing is the delta limit")
    place = Place.prime(p)
    # conj(K(x1;x)) K(x0;x): lambda factors cancel; the chi argument is
    # S(x1, x) - S(x0, x), linear in x.
    const = (x1 * x1 - x0 * x0) / (2 * tau) + a * (x1 - x0) * tau / 2
    beta_lin = -(x1 - x0) / tau
    ball = quad_char_integral_ball(p, Fraction(0), beta_lin, N)
    # |K|^2 is the value |tau|^{-1}, so its squared modulus is |tau|^{-2}
    weight = Amplitude((1 / norm(tau, place)) ** 2, chi(place, const))
    return weight * ball


def overlap_vanishing_threshold(p: int, x_diff: Fraction, tau: Fraction) -> int:
    """Smallest N at which the off-diagonal pairing is exactly zero.

    The pairing vanishes once the linear character is nontrivial on the
    ball: N >= v_p(x_diff / tau) + 1.
    """
    from .places import valuation

    if x_diff == 0:
        raise ValueError("threshold defined for distinct endpoints")
    return valuation(x_diff / tau, p) + 1


@dataclass(frozen=True)
class OscillatorBoundaryData:
    """Caller-supplied boundary data for the time-dependent oscillator.

    gamma0/gamma1 and s0/s1 are boundary values of the auxiliary
    functions, dgamma*/ds* their time derivatives; x0/x1 the endpoints.
    The defining equations of the auxiliary functions are outside this
    library's scope -- the values are accepted as given, with an optional
    consistency flag below.
    """

    x0: Fraction
    x1: Fraction
    gamma0: Fraction
    gamma1: Fraction
    dgamma0: Fraction
    dgamma1: Fraction
    s0: Fraction
    s1: Fraction
    ds0: Fraction
    ds1: Fraction

    def __post_init__(self):
        for name in self.__dataclass_fields__:
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.s0 == 0 or self.s1 == 0:
            raise ValueError("s boundary values must be nonzero")

    def wronskian_consistent(self) -> bool:
        """Optional check: dgamma * s^2 equal at both ends."""
        return self.dgamma0 * self.s0**2 == self.dgamma1 * self.s1**2


def oscillator_chi_rational_part(data: OscillatorBoundaryData) -> Fraction:
    """The exact rational chi argument (1/2)(ds0 x0^2/s0 - ds1 x1^2/s1)."""
    return (data.ds0 * data.x0**2 / data.s0 - data.ds1 * data.x1**2 / data.s1) / 2


def k_oscillator_td(
    place: Place, data: OscillatorBoundaryData, precision: int
) -> Amplitude:
    """Time-dependent oscillator propagator at a p-adic place, exactly.

    Trigonometric values of delta = gamma1 - gamma0 and the square root
    of dgamma1*dgamma0 are computed to the requested precision; the
    character phases depend on finitely many digits, so they are pinned
    exactly or a precision error is raised.  The square root uses the
    canonical digit-order branch.
    """
    if place.is_real:
        raise ValueError("use k_oscillator_td_real for the real place")
    p = place.p
    delta = data.gamma1 - data.gamma0
    if delta == 0:
        raise DegenerateIntervalError("coincident auxiliary phases")
    sin_sum, cos_sum = _sin_cos_sums(delta, p, precision)
    sin_t = PadicTruncation.from_rational(sin_sum, p, precision)
    tan_t = PadicTruncation.from_rational(sin_sum / cos_sum, p, precision)
    root_t = sqrt_p(data.dgamma1 * data.dgamma0, p, precision)

    lam_phase = lambda_of_truncation(place, sin_t.scale(2))
    modulus_sq = (root_t / sin_t).norm()

    chi_rational = chi(place, oscillator_chi_rational_part(data))
    quad_coeff = -(data.dgamma1 * data.x1**2 + data.dgamma0 * data.x0**2) / 2
    term_tan = (PadicTruncation.from_rational(1, p, precision) / tan_t).scale(quad_coeff)
    term_sin = (root_t / sin_t).scale(data.x1 * data.x0)
    chi_trig = chi_of_truncation(term_tan + term_sin)

    return Amplitude(modulus_sq, lam_phase + chi_rational + chi_trig)


def k_oscillator_td_real(data: OscillatorBoundaryData) -> complex:
    """Float evaluation of the oscillator propagator at the real place.

    Exact amplitudes are impossible here: sines of rational arguments
    are irrational, so the value is delivered as a complex float.
    """
    delta = float(data.gamma1 - data.gamma0)
    s = math.sin(delta)
    if s == 0:
        raise DegenerateIntervalError("vanishing sine of the phase difference")
    g_prod = float(data.dgamma1 * data.dgamma0)
    if g_prod < 0:
        raise PrecisionError("dgamma product negative: no real square root")
    root = math.sqrt(g_prod)
    lam = lambda_v(Place.real(), Fraction(2) * _sign_fraction(s)).to_complex()
    modulus = abs(root / s) ** 0.5
    arg_rational = float(oscillator_chi_rational_part(data))
    arg_trig = (
        -float(data.dgamma1 * data.x1**2 + data.dgamma0 * data.x0**2)
        / (2 * math.tan(delta))
        + float(data.x1 * data.x0) * root / s
    )
    # chi at the real place is exp(-2 pi i x)
    return lam * modulus * _cis(-2 * math.pi * (arg_rational + arg_trig))


def _sign_fraction(x: float) -> Fraction:
    return Fraction(1) if x > 0 else Fraction(-1)


def _cis(theta: float) -> complex:
    return complex(math.cos(theta), math.sin(theta))


def oscillator_action_form(
    data: OscillatorBoundaryData, p: int, precision: int
) -> QuadraticActionForm:
    """Quadratic action form of the oscillator, to the stated precision.

    Coefficients are rational representatives of truncated values; their
    character phases and norms agree exactly with the true coefficients
    whenever the precision pins the relevant digits.
    """
    delta = data.gamma1 - data.gamma0
    sin_sum, cos_sum = _sin_cos_sums(delta, p, precision)
    sin_t = PadicTruncation.from_rational(sin_sum, p, precision)
    tan_t = PadicTruncation.from_rational(sin_sum / cos_sum, p, precision)
    root_t = sqrt_p(data.dgamma1 * data.dgamma0, p, precision)
    inv_tan = PadicTruncation.from_rational(1, p, precision) / tan_t
    alpha = (
        inv_tan.scale(data.dgamma1 / 2).representative()
        + data.ds1 / (2 * data.s1)
    )
    beta = (
        inv_tan.scale(data.dgamma0 / 2).representative()
        - data.ds0 / (2 * data.s0)
    )
    gamma = -(root_t / sin_t).representative()
    return QuadraticActionForm(alpha=alpha, beta=beta, gamma=gamma)
