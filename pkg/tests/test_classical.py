import cmath
import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gengamma import classical as cl
from gengamma.errors import DomainError, PoleProximity

mp.mp.dps = 30
EG = 0.57721566490153286060651209008240243


def rel(u, v):
    return abs(complex(u) - complex(v)) / max(abs(complex(v)), 1e-300)


GRID = [complex(x, y) for x in np.arange(-3.7, 4.31, 0.5) for y in (0.0, 0.7, -0.7, 2.3, -2.3)]
OFF_POLE = [z for z in GRID if cl.distance_to_gamma_pole(z) > 0.05]


class TestLnGamma:
    def test_examples(self):
        assert cl.ln_gamma(1) == 0
        assert abs(cl.ln_gamma(0.5) - 0.5 * math.log(math.pi)) < 4e-15
        assert abs(cl.ln_gamma(0.5).real - 0.5723649429) < 1e-10
        assert abs(cl.ln_gamma(4) - math.log(6)) < 4e-15

    @pytest.mark.parametrize("z", OFF_POLE[::3])
    def test_matches_mpmath(self, z):
        assert rel(cmath.exp(cl.ln_gamma(z)), mp.gamma(z)) < 1e-13

    def test_large_arguments(self):
        for z in (50 + 0j, 30 + 40j, -20.5 + 50j, 1 - 50j):
            ref = complex(mp.loggamma(z))
            assert rel(cmath.exp(cl.ln_gamma(z) - ref), 1) < 1e-13

    def test_principal_branch_continuity_across_real_axis_right(self):
        # the cut lies on the negative axis only
        a, b = cl.ln_gamma(2.5 + 1e-12j), cl.ln_gamma(2.5 - 1e-12j)
        assert abs(a - b) < 1e-10

    @pytest.mark.parametrize("z", [0, -1, -2, -7, 1e-9, -3 + 5e-9j])
    def test_poles(self, z):
        with pytest.raises(PoleProximity):
            cl.ln_gamma(z)


class TestGamma:
    def test_examples(self):
        assert cl.gamma_fn(1) == 1
        assert rel(cl.gamma_fn(0.5), math.sqrt(math.pi)) < 1e-15
        assert cl.gamma_fn(5) == 24

    @pytest.mark.parametrize("z", OFF_POLE)
    def test_matches_mpmath_on_grid(self, z):
        assert rel(cl.gamma_fn(z), mp.gamma(z)) < 1e-12

    def test_pole_carries_location(self):
        with pytest.raises(PoleProximity) as info:
            cl.gamma_fn(-2 + 1e-10)
        assert info.value.pole == -2

    def test_just_outside_threshold_is_finite(self):
        v = cl.gamma_fn(-2 + 2e-8)
        assert math.isfinite(abs(v))
        assert rel(v, mp.gamma(mp.mpf(-2) + mp.mpf("2e-8"))) < 1e-6

    def test_rgamma_entire(self):
        assert cl.rgamma(0) == 0
        assert cl.rgamma(-3) == 0
        assert rel(cl.rgamma(0.3 + 0.2j), 1 / mp.gamma(0.3 + 0.2j)) < 1e-13

    @pytest.mark.parametrize("z", [z for z in OFF_POLE if cl.distance_to_gamma_pole(1 - z) > 0.1
                                   and abs(z - round(z.real)) >= 0.1])
    def test_reflection(self, z):
        v = cl.gamma_fn(z) * cl.gamma_fn(1 - z) * cmath.sin(math.pi * z) / math.pi
        assert abs(v - 1) < 1e-10

    @pytest.mark.parametrize("n", [2, 3])
    @pytest.mark.parametrize("x", [0.3, 1.7, 2.2 + 0.7j, -0.35 + 0.7j, 0.6 - 2.3j])
    def test_gauss_multiplication(self, n, x):
        lhs = cl.gamma_fn(n * x) * (2 * math.pi) ** ((n - 1) / 2)
        rhs = cl.pow_real_base(n, n * x - 0.5)
        for k in range(n):
            rhs *= cl.gamma_fn(x + k / n)
        assert rel(lhs, rhs) < 1e-10


class TestDigamma:
    def test_examples(self):
        assert abs(cl.digamma(1) + EG) < 1e-15
        assert abs(cl.digamma(2) - (1 - EG)) < 1e-15

    def test_asymptotic(self):
        gaps = [abs(cl.digamma(x).real - (math.log(x) - 1 / (2 * x))) for x in (10.0, 100.0, 1000.0)]
        assert gaps[0] > gaps[1] > gaps[2]
        assert gaps[2] < 1e-7

    @pytest.mark.parametrize("x", np.linspace(0.1, 100, 23))
    def test_real_accuracy(self, x):
        assert rel(cl.digamma(x), mp.digamma(x)) < 1e-12

    @pytest.mark.parametrize("z", OFF_POLE)
    def test_recurrence(self, z):
        assert abs(cl.digamma(z + 1) - cl.digamma(z) - 1 / z) < 1e-12 * max(1.0, abs(cl.digamma(z)))

    @pytest.mark.parametrize("x", np.linspace(0.5, 10, 20))
    def test_finite_difference(self, x):
        h = 1e-5
        fd = (cl.ln_gamma(x + h) - cl.ln_gamma(x - h)) / (2 * h)
        assert abs(cl.digamma(x) - fd) < 1e-6

    def test_pole(self):
        with pytest.raises(PoleProximity):
            cl.digamma(-4)


class TestBeta:
    def test_examples(self):
        assert abs(cl.beta_fn(1, 1) - 1) < 1e-15
        assert rel(cl.beta_fn(0.5, 0.5), math.pi) < 1e-14
        assert rel(cl.beta_fn(2, 3), 1 / 12) < 1e-14

    def test_complex_against_mpmath(self):
        for x, y in [(0.3 + 0.4j, 1.2), (2.5, -0.3 + 1j), (-1.5 + 0.2j, 0.7)]:
            assert rel(cl.beta_fn(x, y), mp.beta(x, y)) < 1e-12

    def test_no_overflow_for_large_arguments(self):
        v = cl.beta_fn(200, 300)
        assert rel(v, mp.beta(200, 300)) < 1e-11

    def test_poles(self):
        for x, y in [(0, 1), (1, -1), (-0.5, -0.5)]:
            with pytest.raises(PoleProximity):
                cl.beta_fn(x, y)


class TestZeta:
    def test_examples(self):
        assert rel(cl.zeta_fn(2), math.pi**2 / 6) < 1e-12
        assert abs(cl.zeta_fn(2).real - 1.6449340668) < 1e-10
        assert abs(cl.zeta_fn(3).real - 1.2020569032) < 1e-10
        assert abs(cl.zeta_fn(0.5).real + 1.4603545088) < 1e-10

    @pytest.mark.parametrize("s", [0.1, 0.5 + 14j, 0.9 - 2j, 1.5 + 29.9j, 3 + 0.5j, 0.05 + 10j, 12.0])
    def test_matches_mpmath(self, s):
        assert rel(cl.zeta_fn(s), mp.zeta(s)) < 1e-10

    def test_near_first_nontrivial_zero(self):
        s = 0.5 + 14.134725141734693j
        assert abs(cl.zeta_fn(s) - complex(mp.zeta(s))) < 1e-11

    @pytest.mark.parametrize("s", [0.5, 1.3, 2.0, 3.1, 4.0])
    def test_eta_relation(self, s):
        direct = complex(mp.nsum(lambda n: (-1) ** (n - 1) * n ** (-mp.mpf(s)), [1, mp.inf]))
        assert abs((1 - 2 ** (1 - s)) * cl.zeta_fn(s) - direct) < 1e-10

    def test_term_count_grows_with_height_and_is_capped(self):
        assert cl.zeta_terms(2) < cl.zeta_terms(2 + 10j) < cl.zeta_terms(2 + 30j) <= cl.ZETA_MAX_TERMS
        assert cl.zeta_terms(1 + 1e5j) == cl.ZETA_MAX_TERMS

    def test_borwein_weights_are_exact_partial_sums(self):
        n = 6
        d = [n * sum(mp.factorial(n + i - 1) * 4**i / (mp.factorial(n - i) * mp.factorial(2 * i))
                     for i in range(k + 1)) for k in range(n + 1)]
        for k, w in enumerate(cl._borwein_weights(n)):
            assert abs(w - float((d[k] - d[n]) / d[n])) < 1e-16

    @pytest.mark.parametrize("s", [0, -1, -0.5 + 3j, 0.5 + 31j])
    def test_domain(self, s):
        with pytest.raises(DomainError):
            cl.zeta_fn(s)

    def test_pole_at_one(self):
        with pytest.raises(PoleProximity):
            cl.zeta_fn(1 + 1e-10)

    def test_singular_eta_route(self):
        with pytest.raises(DomainError):
            cl.zeta_fn(1 + 2j * math.pi / math.log(2))


class TestPowRealBase:
    def test_examples(self):
        assert cl.pow_real_base(3.7, 0) == 1
        assert cl.pow_real_base(2, 3) == pytest.approx(8, rel=1e-15)
        assert abs(cl.pow_real_base(math.e, 1j * math.pi) + 1) < 1e-15
        assert cl.pow_real_base(0.3, 1) == 0.3

    @pytest.mark.parametrize("b", [0, -1, -0.5, float("nan")])
    def test_domain(self, b):
        with pytest.raises(DomainError):
            cl.pow_real_base(b, 0.5)

    @settings(max_examples=60, deadline=None)
    @given(st.floats(1e-3, 1e3), st.complex_numbers(max_magnitude=20, allow_nan=False, allow_infinity=False))
    def test_exponent_law(self, b, s):
        u = cl.pow_real_base(b, s) * cl.pow_real_base(b, 1 - s)
        assert abs(u - b) <= 1e-12 * b * max(1.0, abs(cl.pow_real_base(b, s)) * abs(cl.pow_real_base(b, 1 - s)) / b)


def test_nearest_pole_helpers():
    assert cl.nearest_nonpositive_integer(2.7) == 0
    assert cl.nearest_nonpositive_integer(-2.4 + 3j) == -2
    assert cl.distance_to_gamma_pole(-2.5) == pytest.approx(0.5)
    assert cl.distance_to_gamma_pole(3 + 4j) == pytest.approx(5)
