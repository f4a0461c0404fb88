import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from padicqm import Amplitude, Phase, Place, amp_mul, amp_render, chi, lambda_v, legendre
from padicqm.characters import assert_eighth_root, legendre_bruteforce

R = Place.real()
P2, P3, P5, P7 = (Place.prime(p) for p in (2, 3, 5, 7))


def nonzero_rationals(p=None):
    units = st.fractions(min_value=F(-30), max_value=F(30), max_denominator=30).filter(
        lambda x: x != 0
    )
    if p is None:
        return units
    return st.builds(lambda u, k: u * F(p) ** k, units, st.integers(-3, 3))


class TestChi:
    def test_examples(self):
        assert chi(P3, F(1, 3)) == Phase(F(1, 3))
        assert chi(P5, F(7)) == Phase(F(0))
        assert chi(P7, F(3, 5)) == Phase(F(0))  # norm <= 1
        assert chi(R, F(1, 4)) == Phase(F(3, 4))

    @settings(max_examples=200)
    @given(x=nonzero_rationals(3), y=nonzero_rationals(3))
    def test_additive(self, x, y):
        for place in (R, P2, P3, P5):
            assert chi(place, x + y) == chi(place, x) + chi(place, y)


class TestLegendre:
    def test_examples(self):
        assert legendre(1, 7) == 1
        assert legendre(4, 7) == 1
        assert legendre(2, 5) == -1  # residues mod 5 are {1, 4}
        assert legendre(10, 5) == 0

    def test_p2_rejected(self):
        with pytest.raises(ValueError):
            legendre(3, 2)

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
    def test_euler_criterion_vs_bruteforce(self, p):
        for a in range(-p, 2 * p + 1):
            assert legendre(a, p) == legendre_bruteforce(a, p)

    @settings(max_examples=200)
    @given(a=st.integers(-50, 50), b=st.integers(-50, 50), p=st.sampled_from([3, 5, 7, 13]))
    def test_multiplicative(self, a, b, p):
        assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)


class TestLambda:
    def test_examples(self):
        assert lambda_v(R, 1) == Phase(F(7, 8))
        assert lambda_v(R, -3) == Phase(F(1, 8))
        assert lambda_v(P3, 3) == Phase(F(1, 4))  # value i
        assert lambda_v(P2, 2) == Phase(F(1, 8))  # value (1+i)/sqrt(2)
        assert lambda_v(P5, 5) == Phase(F(0))  # value 1

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            lambda_v(P3, 0)

    @settings(max_examples=300)
    @given(
        a=nonzero_rationals(2),
        b=nonzero_rationals(2),
        pidx=st.sampled_from([None, 2, 3, 5, 7, 13]),
    )
    def test_identities(self, a, b, pidx):
        place = R if pidx is None else Place.prime(pidx)
        la, lb = lambda_v(place, a), lambda_v(place, b)
        assert_eighth_root(la)
        # square absorption
        assert lambda_v(place, a * a * b) == lb
        # product rule
        if a + b != 0:
            assert la + lb == lambda_v(place, a + b) + lambda_v(place, 1 / a + 1 / b)

    def test_conjugate_is_inverse(self):
        for place in (R, P2, P3, P5, P7):
            for a in (F(2), F(-3, 4), F(5, 7), F(12)):
                assert lambda_v(place, a) + lambda_v(place, -a) == Phase(F(0))


class TestAmplitude:
    def test_mul_examples(self):
        m = Amplitude(F(2), Phase(F(1, 8)))
        assert amp_mul(Amplitude.one(), m) == m
        prod = amp_mul(m, Amplitude(F(2), Phase(F(7, 8))))
        assert prod == Amplitude(F(4), Phase(F(0)))
        assert amp_mul(Amplitude.zero(), m) == Amplitude.zero()

    def test_zero_is_canonical(self):
        assert Amplitude(F(0), Phase(F(1, 3))) == Amplitude.zero()

    def test_conjugate(self):
        a = Amplitude(F(3), Phase(F(1, 3)))
        assert a.conjugate().phase == Phase(F(2, 3))
        assert amp_mul(a, a.conjugate()) == Amplitude(F(9), Phase(F(0)))

    def test_render_examples(self):
        for amp, expect in [
            (Amplitude(F(1), Phase(F(0))), (1.0, 0.0)),
            (Amplitude(F(1), Phase(F(1, 4))), (0.0, 1.0)),
            (Amplitude(F(1, 2), Phase(F(7, 8))), (0.5, -0.5)),
        ]:
            re, im = amp_render(amp)
            assert math.isclose(re, expect[0], abs_tol=1e-12)
            assert math.isclose(im, expect[1], abs_tol=1e-12)

    def test_negative_modulus_rejected(self):
        with pytest.raises(ValueError):
            Amplitude(F(-1))


class TestPhase:
    def test_group_laws(self):
        a, b = Phase(F(3, 4)), Phase(F(5, 8))
        assert a + b == Phase(F(3, 8))
        assert a + (-a) == Phase(F(0))
        assert -Phase(F(0)) == Phase(F(0))

    def test_normalization(self):
        assert Phase(F(9, 4)) == Phase(F(1, 4))
        assert Phase(F(-1, 4)) == Phase(F(3, 4))

    def test_to_complex(self):
        z = Phase(F(1, 2)).to_complex()
        assert abs(z - (-1)) < 1e-15
