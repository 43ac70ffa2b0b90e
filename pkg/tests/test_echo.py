import math
from dataclasses import replace

import numpy as np
import pytest

from tlsecho.model.config import TWO_PI
from tlsecho.model.echo import (
    CONSTANTS,
    PRESET_NAMES,
    ModelVariant,
    SpectralDiffusionParams,
    TlsLevel,
    alpha_kernel,
    beta_kernel,
    dipolar_gamma_sd,
    gamma_sd,
    gamma_sd_high_temperature,
    gamma_sd_low_temperature,
    hahn_amplitude,
    hahn_curve,
    intrinsic_gamma1,
    intrinsic_gamma2,
    jump_rate,
    jump_rate_high_temperature_asymptote,
    jump_rate_low_temperature,
    preset,
    preset_spread,
    stimulated_amplitude,
    stimulated_curve,
    stretched_exponential,
    t1_curve,
    t1_of_model,
    t2_curve,
    t2_of_model,
)
from tlsecho.model.errors import ConvergenceError, DomainError
from tlsecho.model.fitting import TemperatureSeries, fit_stretched_exponential


def log_slope(function, tau, h=1e-4):
    return (math.log(function(tau * (1 + h))) - math.log(function(tau * (1 - h)))) / (
        math.log(1 + h) - math.log(1 - h)
    )


class TestParameters:

    def test_presets_are_angular(self, d2):
        params, variant = d2
        assert variant is ModelVariant.BASE_INTRINSIC
        assert params.gamma_sd0 == pytest.approx(TWO_PI * 743e3)
        assert params.as_over_2pi()["omega_b"] == pytest.approx(1.9e9)

    def test_every_preset_matches_its_variant(self):
        for name in PRESET_NAMES:
            params, variant = preset(name)
            assert params.variant is variant
            assert set(preset_spread(name)) == set(variant.parameter_names)

    def test_unknown_preset_lists_known_names(self):
        with pytest.raises(KeyError, match="D2"):
            preset("D9")

    def test_check_variant_rejects_mixed_fields(self, d2):
        params, _ = d2
        with pytest.raises(DomainError):
            params.check_variant(ModelVariant.REFINED_TEMPERATURE_DEPENDENT)
        mixed = SpectralDiffusionParams(gamma_sd0=1.0, omega_b=1.0, gamma1_b=1.0, gamma2=1.0, w_ex=1.0)
        assert mixed.variant is None

    @pytest.mark.parametrize("field, value", [("gamma_sd0", -1.0), ("omega_b", 0.0), ("gamma1_b", math.nan)])
    def test_rejects_invalid_rates(self, field, value):
        values = dict(gamma_sd0=1.0, omega_b=1.0, gamma1_b=1.0, gamma2=1.0)
        values[field] = value
        with pytest.raises(DomainError):
            SpectralDiffusionParams(**values)

    def test_values_round_trip(self, d2_refined):
        params, variant = d2_refined
        assert SpectralDiffusionParams.from_values(variant, params.values(variant)) == params

    def test_tls_level(self):
        level = TlsLevel(delta=0.0, delta0=3.0)
        assert level.omega0 == 3.0
        assert level.mixing_angle == pytest.approx(math.pi / 2)
        assert TlsLevel(delta=4.0, delta0=3.0).omega0 == pytest.approx(5.0)
        energies = TlsLevel.from_energies(CONSTANTS.hbar * 4.0, CONSTANTS.hbar * 3.0)
        assert energies.delta == pytest.approx(4.0)


class TestTemperatureDependence:

    def test_limits(self, unit_params):
        assert gamma_sd(unit_params, 1e-4) == pytest.approx(gamma_sd_low_temperature(unit_params), abs=1e-6)
        assert gamma_sd(unit_params, 1e4) == pytest.approx(gamma_sd_high_temperature(unit_params), rel=1e-6)
        assert jump_rate(unit_params, 1e-4) == pytest.approx(jump_rate_low_temperature(unit_params), rel=1e-12)

    def test_jump_rate_never_below_low_temperature_value(self, unit_params):
        temperatures = np.geomspace(1e-3, 10.0, 50)
        assert np.all(jump_rate(unit_params, temperatures) >= unit_params.gamma1_b)

    def test_high_temperature_linearity(self, unit_params):
        ratio = jump_rate(unit_params, 2000.0) / jump_rate(unit_params, 1000.0)
        assert ratio == pytest.approx(2.0, rel=1e-6)
        assert jump_rate(unit_params, 1000.0) == pytest.approx(
            jump_rate_high_temperature_asymptote(unit_params, 1000.0), rel=1e-6
        )

    def test_rejects_zero_temperature(self, unit_params):
        with pytest.raises(DomainError):
            gamma_sd(unit_params, 0.0)

    def test_refined_intrinsic_rates(self, d2_refined):
        params, variant = d2_refined
        assert intrinsic_gamma2(params, variant, 0.1) == pytest.approx(0.05 * params.w_ex + params.gamma2_star)
        assert intrinsic_gamma1(params, variant, 0.1) == pytest.approx(0.1 * params.w_ex + 2 * params.gamma2_star)

    def test_dipolar_rate(self):
        d = 3 * CONSTANTS.debye
        epsilon = 2.5 * CONSTANTS.epsilon0
        expected = 2 * math.pi * d * d * 1e24 / (9 * math.sqrt(3) * CONSTANTS.hbar * epsilon)
        assert dipolar_gamma_sd(d, d, 1e24, epsilon) == pytest.approx(expected, rel=1e-14)


class TestKernels:

    def test_reference_value(self):
        assert alpha_kernel(1.0, 1.0) == pytest.approx(0.672, abs=1e-3)

    def test_small_flip_rate_regime(self):
        w, tau = 1.0, 1e-4
        assert 0.999 <= alpha_kernel(tau, w) / (2 * w * tau * tau) <= 1.001

    def test_log_slopes(self):
        assert log_slope(lambda tau: alpha_kernel(tau, 1.0), 1e-3) == pytest.approx(2.0, abs=0.05)
        assert log_slope(lambda tau: alpha_kernel(tau, 1.0), 1e3) == pytest.approx(0.5, abs=0.05)

    def test_large_flip_rate_asymptote(self):
        assert alpha_kernel(1.0, 1e4) == pytest.approx(2 * math.sqrt(1.0 / (math.pi * 1e4)), rel=1e-3)

    def test_zero_arguments(self):
        assert alpha_kernel(0.0, 1.0) == 0.0
        assert alpha_kernel(1.0, 0.0) == 0.0

    def test_beta_reduces_to_alpha(self):
        taus = np.geomspace(1e-3, 1e3, 25)
        np.testing.assert_allclose(beta_kernel(taus, 0.0, 1.0), alpha_kernel(taus, 1.0), rtol=1e-12)

    def test_beta_reduces_to_alpha_on_random_grid(self):
        rng = np.random.default_rng(11)
        taus = 10.0 ** rng.uniform(-3.0, 3.0, 40)
        rates = 10.0 ** rng.uniform(-3.0, 3.0, 40)
        np.testing.assert_allclose(beta_kernel(taus, 0.0, rates), alpha_kernel(taus, rates), rtol=1e-12)

    def test_beta_long_waiting_limit(self):
        assert beta_kernel(1.0, 1e6, 1.0) == pytest.approx(0.8598, abs=0.003)

    def test_beta_grows_with_waiting_time(self):
        values = beta_kernel(1.0, np.linspace(0.0, 5.0, 20), 1.0)
        assert np.all(np.diff(values) > 0)

    def test_broadcasting(self):
        values = alpha_kernel(np.array([[0.1], [1.0]]), np.array([1.0, 2.0, 3.0]))
        assert values.shape == (2, 3)

    def test_rejects_negative_tau(self):
        with pytest.raises(DomainError):
            alpha_kernel(-1.0, 1.0)


class TestAmplitudes:

    def test_frozen_bath_leaves_intrinsic_decay(self, d3):
        params, variant = d3
        tau = 0.5 / params.gamma2
        assert hahn_amplitude(params, variant, 1.0, tau, 0.008) == pytest.approx(math.exp(-1), rel=5e-3)

    def test_curve_uses_the_delay_axis(self, d3):
        params, variant = d3
        delays = np.array([0.2e-6, 1e-6])
        expected = [hahn_amplitude(params, variant, 2.0, d / 2, 0.05) for d in delays]
        np.testing.assert_allclose(hahn_curve(params, variant, 2.0, delays, 0.05), expected, rtol=1e-14)

    def test_stimulated_at_zero_waiting_time(self, d3):
        params, variant = d3
        w = jump_rate(params, 0.05)
        expected = math.exp(-gamma_sd(params, 0.05) * alpha_kernel(1e-6, w))
        assert stimulated_amplitude(params, variant, 1.0, 1e-6, 0.0, 0.05) == pytest.approx(expected, rel=1e-12)

    def test_literal_gamma_sd0_decays_faster(self, d3):
        params, variant = d3
        default = stimulated_amplitude(params, variant, 1.0, 1e-6, 5e-6, 0.05)
        literal = stimulated_amplitude(params, variant, 1.0, 1e-6, 5e-6, 0.05, literal_gamma_sd0=True)
        assert literal < default

    def test_stimulated_curve(self, d3):
        params, variant = d3
        waits = np.array([0.0, 2e-6, 5e-6])
        expected = [stimulated_amplitude(params, variant, 3.0, 1e-6, w, 0.05) for w in waits]
        np.testing.assert_allclose(stimulated_curve(params, variant, 3.0, 1e-6, waits, 0.05), expected, rtol=1e-14)

    @pytest.mark.parametrize("field", ["gamma2", "gamma_sd0"])
    def test_hahn_decreases_with_each_rate(self, d3, field):
        params, variant = d3
        amplitudes = [
            hahn_amplitude(replace(params, **{field: factor * getattr(params, field)}), variant, 1.0, 0.5e-6, 0.05)
            for factor in (0.5, 1.0, 2.0)
        ]
        assert amplitudes[0] > amplitudes[1] > amplitudes[2]

    def test_stimulated_decay_is_stretched_at_80_mk(self, d3):
        # the measured exponent band is met with the diffusion exponent scaled by gamma_sd0
        params, variant = d3
        waits = np.linspace(0.0, 30e-6, 301)

        def exponent(literal):
            curve = stimulated_curve(params, variant, 1.0, 0.55e-6, waits, 0.08, literal_gamma_sd0=literal)
            return fit_stretched_exponential(TemperatureSeries(0.08, tuple(waits), tuple(curve), tau=0.55e-6)).p

        literal = exponent(True)
        assert 0.45 <= literal <= 0.7
        assert exponent(False) > literal

    def test_variant_mismatch(self, d3):
        params, _ = d3
        with pytest.raises(DomainError):
            hahn_amplitude(params, ModelVariant.REFINED_TEMPERATURE_DEPENDENT, 1.0, 1e-6, 0.05)

    def test_stretched_exponential(self):
        assert stretched_exponential(2.0, 3.0, 3.0, 0.5) == pytest.approx(2 * math.exp(-1))
        with pytest.raises(DomainError):
            stretched_exponential(1.0, 1.0, 1.0, 2.5)


class TestExtraction:

    def test_t2_at_8_mk_is_intrinsic(self, d3):
        params, variant = d3
        assert t2_of_model(params, variant, 0.008) == pytest.approx(1 / params.gamma2, rel=0.01)

    def test_t2_at_90_mk(self, d3):
        params, variant = d3
        assert 0.49e-6 <= t2_of_model(params, variant, 0.09) <= 0.73e-6

    def test_t2_solves_the_one_over_e_condition(self, d3):
        params, variant = d3
        delay = t2_of_model(params, variant, 0.05)
        assert hahn_amplitude(params, variant, 1.0, delay / 2, 0.05) == pytest.approx(math.exp(-1), rel=1e-9)

    def test_t2_curve(self, d3):
        params, variant = d3
        curve = t2_curve(params, variant, [0.008, 0.09])
        assert curve == [t2_of_model(params, variant, 0.008), t2_of_model(params, variant, 0.09)]

    def test_t1_at_8_mk_is_intrinsic(self, d3):
        params, variant = d3
        assert t1_of_model(params, variant, 1e-6, 0.008) == pytest.approx(0.5 / params.gamma2, rel=0.01)

    def test_t1_curve(self, d3):
        params, variant = d3
        curve = t1_curve(params, variant, 1e-6, [0.02, 0.05])
        assert curve == [t1_of_model(params, variant, 1e-6, 0.02), t1_of_model(params, variant, 1e-6, 0.05)]

    def test_t2_decreases_with_temperature(self, d3):
        params, variant = d3
        curve = t2_curve(params, variant, np.linspace(0.008, 0.11, 30))
        assert np.all(np.diff(curve) < 0)

    def test_t1_at_80_mk(self, d3):
        params, variant = d3
        assert 0.5e-6 <= t1_of_model(params, variant, 0.55e-6, 0.08) <= 5e-6

    def test_frozen_diffusion_limits_are_exact(self):
        gamma2 = TWO_PI * 52e3
        quiet = SpectralDiffusionParams(gamma_sd0=0.0, omega_b=TWO_PI * 2e9, gamma1_b=TWO_PI * 165e3, gamma2=gamma2)
        variant = ModelVariant.BASE_INTRINSIC
        assert t2_of_model(quiet, variant, 0.05) == pytest.approx(1 / gamma2, rel=1e-9)
        assert t1_of_model(quiet, variant, 0.55e-6, 0.05) == pytest.approx(0.5 / gamma2, rel=1e-9)

    def test_no_decay_is_not_bracketed(self):
        frozen = SpectralDiffusionParams(gamma_sd0=1e6, omega_b=TWO_PI * 2e9, gamma1_b=1e5, gamma2=0.0)
        with pytest.raises(ConvergenceError):
            t2_of_model(frozen, ModelVariant.BASE_INTRINSIC, 0.001)
