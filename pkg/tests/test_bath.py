import dataclasses
import math

import numpy as np
import pytest

from tlsecho.model.bath import (
    BathEnsemble,
    RabiConfig,
    TelegraphConfig,
    ensemble_echo,
    flip_history_average,
    predicted_decay_exponent,
    rabi_sweep,
    segment_integrals,
    two_pulse_rabi_amplitude,
)
from tlsecho.model.echo import CONSTANTS, alpha_kernel, beta_kernel
from tlsecho.model.errors import DomainError
from tlsecho.model.losses import debye_to_si, radiative_rate_from_pi_pulse


class TestTelegraph:

    def test_segment_without_flips_integrates_the_sign(self):
        rng = np.random.default_rng(0)
        integrals, signs = segment_integrals(rng, 1e-9, 1.0, np.array([1.0, -1.0]))
        np.testing.assert_allclose(integrals, [1e-9, -1e-9], rtol=1e-6)
        assert signs.tolist() == [1.0, -1.0]

    def test_segment_integral_is_bounded_by_its_length(self):
        rng = np.random.default_rng(1)
        integrals, _ = segment_integrals(rng, 2.0, 5.0, np.ones(1000))
        assert np.all(np.abs(integrals) <= 2.0 + 1e-12)

    def test_hahn_average_matches_closed_form(self):
        mean, std_error = flip_history_average(TelegraphConfig(w=1.0, tau=1.0, n_histories=200_000, seed=1))
        assert abs(mean - alpha_kernel(1.0, 1.0)) < 4 * std_error

    def test_stimulated_average_matches_closed_form(self):
        cfg = TelegraphConfig(w=1.0, tau=1.0, tau_prime=1.0, n_histories=200_000, seed=2)
        mean, std_error = flip_history_average(cfg)
        assert abs(mean - beta_kernel(1.0, 1.0, 1.0)) < 4 * std_error

    def test_result_does_not_depend_on_worker_count(self):
        cfg = TelegraphConfig(w=2.0, tau=0.5, n_histories=20_000, seed=5)
        assert flip_history_average(cfg, workers=1) == flip_history_average(cfg, workers=4)

    def test_seed_changes_the_estimate(self):
        first = flip_history_average(TelegraphConfig(w=1.0, tau=1.0, n_histories=10_000, seed=1))
        second = flip_history_average(TelegraphConfig(w=1.0, tau=1.0, n_histories=10_000, seed=2))
        assert first != second

    def test_frozen_bath(self):
        assert flip_history_average(TelegraphConfig(w=0.0, tau=1.0)) == (0.0, 0.0)

    @pytest.mark.parametrize("kwargs", [dict(n_histories=0), dict(seed=-1), dict(w=-1.0)])
    def test_rejects_invalid_config(self, kwargs):
        values = dict(w=1.0, tau=1.0)
        values.update(kwargs)
        with pytest.raises(DomainError):
            TelegraphConfig(**values)

    @pytest.mark.slow
    @pytest.mark.parametrize("w_tau", [0.01, 0.1, 1.0, 10.0, 100.0])
    @pytest.mark.parametrize("ratio", [0.0, 1.0, 10.0])
    def test_kernel_oracle_grid(self, w_tau, ratio):
        cfg = TelegraphConfig(w=w_tau, tau=1.0, tau_prime=ratio, n_histories=1_000_000, seed=11)
        mean, std_error = flip_history_average(cfg)
        assert abs(mean - beta_kernel(1.0, ratio, w_tau)) < 4 * std_error


class TestEnsemble:

    @staticmethod
    def bath(seed=3, n_b=300):
        dipole = debye_to_si(3.0)
        reference = BathEnsemble(
            c_b=1.0, d_a=dipole, d_b=dipole, epsilon=2.5 * CONSTANTS.epsilon0, n_b=n_b, seed=seed
        )
        # density for which the predicted exponent is 1 at W = tau = 1
        c_b = 1.0 / (reference.gamma_sd * alpha_kernel(1.0, 1.0))
        return dataclasses.replace(reference, c_b=c_b)

    def test_decay_follows_mean_field_law(self):
        bath = self.bath()
        amplitude, _ = ensemble_echo(bath, 1.0, 1.0, 4000)
        predicted = predicted_decay_exponent(bath, 1.0, 1.0)
        assert predicted == pytest.approx(1.0, rel=1e-12)
        assert -math.log(amplitude) == pytest.approx(predicted, rel=0.15)

    def test_shell_holds_the_bath(self):
        bath = self.bath()
        volume = 4 / 3 * math.pi * (bath.r_max ** 3 - bath.r_min ** 3)
        assert bath.c_b * volume == pytest.approx(bath.n_b, rel=1e-9)

    def test_deterministic_for_a_seed(self):
        bath = self.bath(n_b=50)
        assert ensemble_echo(bath, 1.0, 1.0, 500, workers=1) == ensemble_echo(bath, 1.0, 1.0, 500, workers=3)

    def test_no_dynamics_no_decay(self):
        assert ensemble_echo(self.bath(n_b=10), 0.0, 1.0, 10) == (1.0, 0.0)

    def test_rejects_empty_bath(self):
        with pytest.raises(DomainError):
            BathEnsemble(c_b=1.0, d_a=1.0, d_b=1.0, epsilon=1.0, n_b=0)


class TestRabi:

    @staticmethod
    def config(**overrides):
        theta, omega_d, gamma_r = 1e-7, 2 * math.pi * 7e9, 100.0
        # second pulse is a pi pulse, the first a pi/2 pulse
        pi_power = (math.pi / theta) ** 2 * CONSTANTS.hbar * omega_d / (4 * gamma_r)
        values = dict(
            gamma_r=gamma_r, pulse1_power=pi_power / 4, pulse2_power=pi_power, theta=theta, omega_d=omega_d
        )
        values.update(overrides)
        return RabiConfig(**values)

    def test_ideal_pulses_give_full_echo(self):
        cfg = self.config()
        assert radiative_rate_from_pi_pulse(cfg.theta, cfg.pulse2_power, cfg.omega_d) == pytest.approx(100.0)
        assert two_pulse_rabi_amplitude(cfg) == pytest.approx(1.0, rel=1e-9)

    def test_coupling_spread_reduces_the_echo(self):
        spread = self.config(coupling_spread=0.5, n_samples=5000, seed=4)
        assert two_pulse_rabi_amplitude(spread) < 1.0
        assert spread.radiative_rates().mean() == pytest.approx(100.0, rel=0.05)

    def test_sweep_reuses_one_draw(self):
        cfg = self.config(coupling_spread=0.3, n_samples=2000, seed=9)
        powers = np.array([cfg.pulse1_power / 2, cfg.pulse1_power])
        sweep = rabi_sweep(cfg, powers)
        assert sweep.shape == (2,)
        assert sweep[1] == pytest.approx(two_pulse_rabi_amplitude(cfg), rel=1e-12)

    def test_rejects_zero_pulse_length(self):
        with pytest.raises(DomainError):
            self.config(theta=0.0)
