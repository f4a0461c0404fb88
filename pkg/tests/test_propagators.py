import cmath
import math
import random
from fractions import Fraction as F
from functools import cmp_to_key

import pytest

from padicqm import (
    Amplitude,
    DegenerateFormError,
    DegenerateIntervalError,
    OscillatorBoundaryData,
    PartitionError,
    PartitionSpec,
    Phase,
    Place,
    QuadraticActionForm,
    action_form_constant_field,
    chi,
    compose,
    compose_kernels,
    desitter_action_form,
    finite_n_propagator,
    k_constant_field,
    k_desitter,
    k_free,
    k_general_quadratic,
    k_oscillator_td,
    k_oscillator_td_real,
    lambda_v,
    norm,
    oscillator_action_form,
    overlap_ball_integral,
    overlap_vanishing_threshold,
    semigroup_residual,
    symbolic_constant_field_kernel,
)
from padicqm.errors import PrecisionError
from padicqm.places import place_less

R = Place.real()
P2, P3, P5, P7 = (Place.prime(p) for p in (2, 3, 5, 7))
ALL_PLACES = (R, P2, P3, P5, P7)


def rand_rational(rng, place=None, span=2):
    x = F(rng.randint(1, 20) * rng.choice((-1, 1)), rng.randint(1, 20))
    if place is not None and not place.is_real:
        x *= F(place.p) ** rng.randint(-span, span)
    return x


def sorted_at_place(values, place):
    return sorted(
        values, key=cmp_to_key(lambda a, b: -1 if place_less(a, b, place) else 1)
    )


class TestConstantFieldKernel:
    def test_padic_example(self):
        assert k_constant_field(P3, 0, 1, 0, 1) == Amplitude(F(1), Phase(F(0)))

    def test_real_example(self):
        # lambda(2) has phase 7/8 and chi_inf(-1/2) adds 1/2
        assert k_constant_field(R, 0, 1, 0, 1) == Amplitude(F(1), Phase(F(3, 8)))

    def test_free_specialization(self):
        rng = random.Random(11)
        for place in ALL_PLACES:
            for _ in range(10):
                T = rand_rational(rng, place)
                q0, q1 = rand_rational(rng, place), rand_rational(rng, place)
                assert k_constant_field(place, 0, T, q0, q1) == k_free(place, T, q0, q1)

    def test_modulus_is_inverse_norm_of_time(self):
        rng = random.Random(12)
        for place in ALL_PLACES:
            for _ in range(10):
                a = rand_rational(rng, place)
                T = rand_rational(rng, place)
                amp = k_constant_field(place, a, T, 0, 1)
                assert amp.modulus_sq == 1 / norm(T, place)

    def test_degenerate_interval(self):
        with pytest.raises(DegenerateIntervalError):
            k_constant_field(P3, 1, 0, 0, 1)

    def test_hermitian_time_reversal(self):
        rng = random.Random(13)
        for place in ALL_PLACES:
            a = rand_rational(rng, place)
            T = rand_rational(rng, place)
            q0, q1 = rand_rational(rng, place), rand_rational(rng, place)
            amp = k_constant_field(place, a, T, q0, q1)
            conj = amp.conjugate()
            expected_phase = -(
                lambda_v(place, 2 * T)
                + chi(
                    place,
                    -(
                        (q1 - q0) ** 2 / (2 * T)
                        + a * (q1 + q0) * T / 2
                        - a * a * T**3 / 24
                    ),
                )
            )
            assert conj.phase == expected_phase
            assert conj.conjugate() == amp


class TestFreeKernel:
    def test_two_adic_value(self):
        assert k_free(P2, 1, 0, 0) == Amplitude(F(1), Phase(F(1, 8)))

    def test_five_adic_value_and_composition_cross_check(self):
        amp = k_free(P5, 5, 0, 1)
        # modulus_sq = 1/|5|_5 = 5; phase = lambda_5(10) + {-1/10}_5
        assert amp.modulus_sq == 5
        assert amp == Amplitude(F(5), lambda_v(P5, 10) + chi(P5, F(-1, 10)))
        # cross-check through an N=2 partition: 0 < 25 < 5 in digit order
        part = PartitionSpec(P5, (F(0), F(25), F(5)))
        assert finite_n_propagator(P5, 0, part, 0, 1) == amp

    def test_real_prefactor_matches_inverse_sqrt_of_iT(self):
        for T in (F(1), F(2), F(1, 3), F(-1), F(-5, 2), F(7)):
            amp = k_free(R, T, 0, 0)
            got = complex(*amp.render())
            want = 1 / cmath.sqrt(1j * float(T))
            assert abs(got - want) < 1e-12


class TestDeSitterKernel:
    def test_trivial_point(self):
        assert k_desitter(P3, 0, 1, 0, 0) == Amplitude(F(1), Phase(F(0)))

    def test_consistency_with_general_quadratic(self):
        rng = random.Random(21)
        for place in ALL_PLACES:
            for _ in range(20):
                lam = rand_rational(rng, place)
                T = rand_rational(rng, place)
                q0, q1 = rand_rational(rng, place), rand_rational(rng, place)
                form = desitter_action_form(lam, T)
                assert k_general_quadratic(place, form, q1, q0) == k_desitter(
                    place, lam, T, q0, q1
                )

    def test_real_float_cross_check(self):
        lam, T, q0, q1 = F(1, 2), F(3), F(1), F(2)
        amp = k_desitter(R, lam, T, q0, q1)
        got = complex(*amp.render())
        # float evaluation of the closed form
        lam_f, T_f, q0_f, q1_f = map(float, (lam, T, q0, q1))
        pref = (1 - 1j * math.copysign(1, -2 * T_f)) / math.sqrt(2)
        pref /= math.sqrt(abs(4 * T_f))
        arg = (
            (q1_f - q0_f) ** 2 / (8 * T_f)
            + (lam_f * (q1_f + q0_f) - 2) * T_f / 4
            - lam_f**2 * T_f**3 / 24
        )
        want = pref * cmath.exp(-2j * math.pi * arg)
        assert abs(got - want) < 1e-12


class TestGeneralQuadratic:
    def test_reproduces_constant_field(self):
        rng = random.Random(31)
        for place in ALL_PLACES:
            for _ in range(20):
                a = rand_rational(rng, place)
                T = rand_rational(rng, place)
                q0, q1 = rand_rational(rng, place), rand_rational(rng, place)
                form = action_form_constant_field(a, T)
                assert k_general_quadratic(place, form, q1, q0) == k_constant_field(
                    place, a, T, q0, q1
                )

    def test_zero_mixed_partial_rejected(self):
        form = QuadraticActionForm(alpha=F(1), beta=F(1), gamma=F(0))
        with pytest.raises(DegenerateFormError):
            k_general_quadratic(P3, form, 0, 0)


class TestComposition:
    def test_free_halves(self):
        for place in ALL_PLACES:
            assert compose(place, 0, F(1, 2), F(1, 2)) == symbolic_constant_field_kernel(
                place, 0, 1
            )

    def test_constant_field_steps(self):
        for place in ALL_PLACES:
            assert compose(place, 1, 1, 2) == symbolic_constant_field_kernel(place, 1, 3)

    def test_lambda_bookkeeping_collapses(self):
        # the product of step prefactors and the Gauss factor must give
        # exactly lambda(2(T1+T2)) |T1+T2|^{-1/2}
        rng = random.Random(41)
        for place in ALL_PLACES:
            for _ in range(20):
                T1 = rand_rational(rng, place)
                T2 = rand_rational(rng, place)
                if T1 + T2 == 0:
                    continue
                sym = compose(place, 0, T1, T2)
                assert sym.prefactor == Amplitude(
                    1 / norm(T1 + T2, place), lambda_v(place, 2 * (T1 + T2))
                )

    def test_degenerate_total(self):
        with pytest.raises(DegenerateIntervalError):
            compose(P3, 0, 1, -1)


class TestFiniteN:
    def test_single_step_is_direct(self):
        part = PartitionSpec(R, (F(0), F(1)))
        assert finite_n_propagator(R, 2, part, 0, 1) == k_constant_field(R, 2, 1, 0, 1)

    def test_equal_halves(self):
        part = PartitionSpec(R, (F(0), F(1, 2), F(1)))
        assert finite_n_propagator(R, 1, part, 0, 1) == k_constant_field(R, 1, 1, 0, 1)

    def test_random_padic_partitions(self):
        rng = random.Random(51)
        for place in (P2, P3, P5, P7):
            for n in (2, 4, 8):
                pts = set()
                while len(pts) < n + 1:
                    pts.add(rand_rational(rng, place))
                ordered = sorted_at_place(pts, place)
                part = PartitionSpec(place, tuple(ordered))
                a = rand_rational(rng, place)
                q0, q1 = rand_rational(rng, place), rand_rational(rng, place)
                want = k_constant_field(place, a, ordered[-1] - ordered[0], q0, q1)
                assert finite_n_propagator(place, a, part, q0, q1) == want

    def test_partition_validation(self):
        with pytest.raises(PartitionError):
            PartitionSpec(R, (F(0), F(0)))
        with pytest.raises(PartitionError):
            PartitionSpec(R, (F(1),))
        with pytest.raises(PartitionError):
            # 3-adically, 9 comes before 3 (|9| < |3|): this order is invalid
            PartitionSpec(P3, (F(3), F(9)))
        PartitionSpec(P3, (F(9), F(3)))  # valid in digit order


class TestSemigroup:
    def test_examples(self):
        assert semigroup_residual(P3, 0, 0, 1, 2, 0, 1).is_zero
        assert semigroup_residual(P5, 2, 0, 1, 2, 0, 1).is_zero
        assert semigroup_residual(R, 2, 0, 1, 2, 0, 1).is_zero

    def test_degenerate_times(self):
        with pytest.raises(DegenerateIntervalError):
            semigroup_residual(R, 0, 0, 0, 1, 0, 1)


class TestOverlap:
    def test_diagonal_mass(self):
        for p in (3, 5):
            for n in (0, 1, 3):
                for tau in (F(1), F(p), F(1, p)):
                    val = overlap_ball_integral(p, 0, 0, tau, F(2), F(2), n)
                    mass = F(p) ** n / norm(tau, Place.prime(p))
                    assert val == Amplitude(mass * mass, Phase(F(0)))

    def test_offdiagonal_vanishing_threshold(self):
        p = 3
        for x_diff in (F(1), F(1, 3), F(9), F(2, 3)):
            for tau in (F(1), F(3)):
                n0 = overlap_vanishing_threshold(p, x_diff, tau)
                x0 = F(1, 2)
                x1 = x0 + x_diff
                for n in (n0, n0 + 1, n0 + 2):
                    assert overlap_ball_integral(p, 0, 0, tau, x0, x1, n).is_zero
                below = overlap_ball_integral(p, 0, 0, tau, x0, x1, n0 - 1)
                assert not below.is_zero

    def test_constant_field_same_thresholds(self):
        p, a = 5, F(2)
        x0, x1, tau = F(0), F(1), F(1, 5)
        n0 = overlap_vanishing_threshold(p, x1 - x0, tau)
        assert overlap_ball_integral(p, a, 0, tau, x0, x1, n0).is_zero
        assert not overlap_ball_integral(p, a, 0, tau, x0, x1, n0 - 1).is_zero

    def test_coincident_times_rejected(self):
        with pytest.raises(DegenerateIntervalError):
            overlap_ball_integral(3, 0, 1, 1, 0, 1, 2)


OSC_SAMPLE = OscillatorBoundaryData(
    x0=F(1), x1=F(2),
    gamma0=F(0), gamma1=F(3),
    dgamma0=F(1), dgamma1=F(1),
    s0=F(1), s1=F(1), ds0=F(0), ds1=F(0),
)


class TestOscillator:
    def test_endpoint_free_value(self):
        data = OscillatorBoundaryData(
            x0=F(0), x1=F(0), gamma0=F(0), gamma1=F(3),
            dgamma0=F(1), dgamma1=F(1), s0=F(1), s1=F(1),
            ds0=F(1, 2), ds1=F(1, 3),
        )
        amp = k_oscillator_td(P3, data, 20)
        # with x = 0 everything chi-dependent drops; |sin|_3 = |3|_3
        assert amp.modulus_sq == 3
        from padicqm.analytic import PadicTruncation, _sin_cos_sums, lambda_of_truncation

        s, _ = _sin_cos_sums(F(3), 3, 20)
        st = PadicTruncation.from_rational(s, 3, 20)
        assert amp.phase == lambda_of_truncation(P3, st.scale(2))

    def test_matches_general_quadratic_route(self):
        for p in (3, 5, 7):
            place = Place.prime(p)
            data = OscillatorBoundaryData(
                x0=F(1), x1=F(2), gamma0=F(0), gamma1=F(p),
                dgamma0=F(1), dgamma1=F(1), s0=F(2), s1=F(3),
                ds0=F(1, 5) if p != 5 else F(1, 3), ds1=F(1, 7) if p != 7 else F(1, 3),
            )
            amp = k_oscillator_td(place, data, 24)
            form = oscillator_action_form(data, p, 24)
            alt = k_general_quadratic(place, form, data.x1, data.x0)
            assert amp.phase == alt.phase
            assert amp.modulus_sq == alt.modulus_sq

    def test_two_term_reduction_with_static_s(self):
        # vanishing ds makes the rational chi term drop entirely
        amp = k_oscillator_td(P3, OSC_SAMPLE, 20)
        form = oscillator_action_form(OSC_SAMPLE, 3, 20)
        assert form.alpha == form.beta  # unit dgamma, static s
        alt = k_general_quadratic(P3, form, OSC_SAMPLE.x1, OSC_SAMPLE.x0)
        assert amp == alt

    def test_real_place_float_route(self):
        data = OscillatorBoundaryData(
            x0=F(1, 2), x1=F(1, 3), gamma0=F(1, 10), gamma1=F(7, 10),
            dgamma0=F(2), dgamma1=F(2), s0=F(1), s1=F(2),
            ds0=F(1, 5), ds1=F(1, 7),
        )
        got = k_oscillator_td_real(data)
        dg = float(data.gamma1 - data.gamma0)
        root = math.sqrt(float(data.dgamma1 * data.dgamma0))
        lam = (1 - 1j * math.copysign(1, 2 * math.sin(dg))) / math.sqrt(2)
        mod = abs(root / math.sin(dg)) ** 0.5
        a1 = 0.5 * (
            float(data.ds0) * float(data.x0) ** 2 / float(data.s0)
            - float(data.ds1) * float(data.x1) ** 2 / float(data.s1)
        )
        a2 = -(
            float(data.dgamma1) * float(data.x1) ** 2
            + float(data.dgamma0) * float(data.x0) ** 2
        ) / (2 * math.tan(dg)) + float(data.x1 * data.x0) * root / math.sin(dg)
        want = lam * mod * cmath.exp(-2j * math.pi * (a1 + a2))
        assert abs(got - want) < 1e-9

    def test_precision_error_when_too_shallow(self):
        with pytest.raises(PrecisionError):
            k_oscillator_td(P3, OSC_SAMPLE, 1)

    def test_invalid_boundary_data(self):
        with pytest.raises(ValueError):
            OscillatorBoundaryData(
                x0=F(0), x1=F(0), gamma0=F(0), gamma1=F(3),
                dgamma0=F(1), dgamma1=F(1), s0=F(0), s1=F(1),
                ds0=F(0), ds1=F(0),
            )

    def test_wronskian_flag(self):
        assert OSC_SAMPLE.wronskian_consistent()
        skewed = OscillatorBoundaryData(
            x0=F(1), x1=F(2), gamma0=F(0), gamma1=F(3),
            dgamma0=F(1), dgamma1=F(2), s0=F(1), s1=F(1),
            ds0=F(0), ds1=F(0),
        )
        assert not skewed.wronskian_consistent()


class TestFormInvarianceAcrossPlaces:
    def test_same_symbolic_form_every_place(self):
        # the symbolic kernel built at each place carries the identical
        # action form; only norm/chi/lambda dispatch on the place
        a, T = F(2, 3), F(5, 4)
        forms = {
            place: symbolic_constant_field_kernel(place, a, T).form
            for place in ALL_PLACES
        }
        reference = action_form_constant_field(a, T)
        assert all(form == reference for form in forms.values())

    def test_composition_form_is_place_independent(self):
        a, T1, T2 = F(1, 2), F(2), F(3)
        forms = {place: compose(place, a, T1, T2).form for place in ALL_PLACES}
        reference = action_form_constant_field(a, T1 + T2)
        assert all(form == reference for form in forms.values())
