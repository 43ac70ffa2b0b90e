import math

import numpy as np
import pytest
from scipy import integrate, special

from tlsecho.model.errors import DomainError
from tlsecho.model.specfun import (
    DIFFERENCE_SWITCH,
    SERIES_SWITCH,
    bessel_i0,
    bessel_i0e,
    bessel_i1,
    bessel_i1e,
    bessel_struve_difference,
    coth,
    scaled_kernel_combination,
    sech2,
    struve_l0,
    struve_l1,
)


def difference_by_quadrature(x, order):
    """I_n - L_n = c_n int_0^1 e^(-xt) (1 - t^2)^(n - 1/2) dt with c_0 = 2/pi, c_1 = 2x/pi."""
    integral, _ = integrate.quad(
        lambda t: math.exp(-x * t) * (1.0 + t) ** (order - 0.5),
        0.0,
        1.0,
        weight="alg",
        wvar=(0.0, order - 0.5),
        epsabs=0.0,
        epsrel=1e-13,
        limit=200,
    )
    return 2.0 / math.pi * (x if order else 1.0) * integral


class TestBessel:

    @pytest.mark.parametrize("ours, reference", [(bessel_i0, special.i0), (bessel_i1, special.i1)])
    def test_matches_reference_up_to_700(self, ours, reference):
        x = np.concatenate((np.linspace(0.0, 30.0, 601), np.linspace(30.0, 700.0, 300)))
        np.testing.assert_allclose(ours(x), reference(x), rtol=1e-10, atol=0)

    @pytest.mark.parametrize("ours, reference", [(bessel_i0e, special.i0e), (bessel_i1e, special.i1e)])
    def test_scaled_variants_stay_finite(self, ours, reference):
        x = np.geomspace(1e-3, 1e5, 400)
        values = ours(x)
        assert np.all(np.isfinite(values))
        np.testing.assert_allclose(values, reference(x), rtol=1e-10)

    def test_derivative_of_i0_is_i1(self):
        x = np.linspace(0.1, 30.0, 300)
        h = 1e-5
        derivative = (bessel_i0(x + h) - bessel_i0(x - h)) / (2 * h)
        np.testing.assert_allclose(derivative, bessel_i1(x), rtol=1e-6)

    def test_continuous_across_series_switch(self):
        below, above = np.nextafter(SERIES_SWITCH, 0.0), np.nextafter(SERIES_SWITCH, np.inf)
        assert bessel_i0(above) == pytest.approx(bessel_i0(below), rel=1e-12)
        assert bessel_i1e(above) == pytest.approx(bessel_i1e(below), rel=1e-12)

    def test_values_at_zero(self):
        assert bessel_i0(0.0) == 1.0
        assert bessel_i1(0.0) == 0.0

    def test_scalar_in_float_out(self):
        assert isinstance(bessel_i0(1.5), float)
        assert isinstance(bessel_i1(np.array([1.5])), np.ndarray)

    def test_repeated_calls_are_bit_identical(self):
        x = np.linspace(0.0, 50.0, 77)
        assert np.array_equal(bessel_i1e(x), bessel_i1e(x))

    @pytest.mark.parametrize("bad", [-1.0, math.nan, math.inf])
    def test_rejects_invalid_arguments(self, bad):
        with pytest.raises(DomainError):
            bessel_i0(bad)


class TestStruve:

    @pytest.mark.parametrize("ours, order", [(struve_l0, 0), (struve_l1, 1)])
    def test_matches_reference_up_to_50(self, ours, order):
        x = np.linspace(0.0, 50.0, 501)
        np.testing.assert_allclose(ours(x), special.modstruve(order, x), rtol=1e-8, atol=1e-300)

    def test_difference_decays_algebraically(self):
        # I0 - L0 -> 2 / (pi x) and I1 - L1 -> 2 / pi
        assert bessel_struve_difference(1e4, 0) == pytest.approx(2 / (math.pi * 1e4), rel=1e-6)
        assert bessel_struve_difference(1e4, 1) == pytest.approx(2 / math.pi, rel=1e-6)

    @pytest.mark.parametrize("order", [0, 1])
    @pytest.mark.parametrize("x", [0.5, 5.0, 12.0, 19.99, 20.0, 20.01, 30.0, 39.99, 40.01, 45.0])
    def test_difference_matches_integral_near_the_switches(self, x, order):
        assert bessel_struve_difference(x, order) == pytest.approx(difference_by_quadrature(x, order), rel=1e-11)

    def test_difference_values_at_zero(self):
        assert bessel_struve_difference(0.0, 0) == pytest.approx(1.0, rel=1e-14)
        assert bessel_struve_difference(0.0, 1) == 0.0

    def test_difference_continuous_across_its_switch(self):
        below, above = np.nextafter(DIFFERENCE_SWITCH, 0.0), np.nextafter(DIFFERENCE_SWITCH, np.inf)
        for order in (0, 1):
            assert bessel_struve_difference(above, order) == pytest.approx(
                bessel_struve_difference(below, order), rel=1e-13
            )

    def test_difference_rejects_other_orders(self):
        with pytest.raises(ValueError):
            bessel_struve_difference(1.0, 2)


class TestKernelCombination:

    def test_matches_reference(self):
        x = np.linspace(0.05, 15.0, 200)
        reference = np.exp(-x) * (
            special.i1(x) * special.modstruve(0, x) - special.i0(x) * special.modstruve(1, x)
        )
        np.testing.assert_allclose(scaled_kernel_combination(x), reference, rtol=1e-6)

    def test_positive_and_finite(self):
        values = scaled_kernel_combination(np.geomspace(1e-6, 1e6, 500))
        assert np.all(values > 0)
        assert np.all(np.isfinite(values))

    @pytest.mark.parametrize("x", [1e-2, 1e-3, 1e-4])
    def test_small_argument_limit(self, x):
        unscaled = scaled_kernel_combination(x) * math.exp(x)
        assert unscaled / (x * x / (3 * math.pi)) == pytest.approx(1.0, abs=0.01)


class TestHyperbolic:

    def test_sech2_underflows_without_overflow(self):
        with np.errstate(over="raise"):
            assert sech2(1000.0) == 0.0
            assert sech2(-1000.0) == 0.0

    def test_sech2_matches_definition(self):
        x = np.linspace(-5, 5, 41)
        np.testing.assert_allclose(sech2(x), 1 / np.cosh(x) ** 2, rtol=1e-13)

    def test_coth_rejects_zero(self):
        with pytest.raises(DomainError):
            coth(0.0)

    def test_coth_large_argument(self):
        assert coth(50.0) == 1.0
