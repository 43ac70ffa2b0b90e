import numpy as np
import pytest

from tlsecho.model.echo import ModelVariant, SpectralDiffusionParams, preset
from tlsecho.model.synth import SynthDecaySpec, SynthTraceSpec, generate_decay_dataset, generate_trace_set

# echo shape used across the trace tests: 1 mV Gaussian of 50 ns at 1 us, sampled every 3.2 ns
PULSE_DT = 3.2e-9
PULSE_CENTER = 1e-6
PULSE_WIDTH = 50e-9
PULSE_AMPLITUDE = 1e-3


@pytest.fixture
def d2():
    params, variant = preset("D2")
    return params, variant


@pytest.fixture
def d3():
    params, variant = preset("D3")
    return params, variant


@pytest.fixture
def d2_refined():
    params, variant = preset("D2-refined")
    return params, variant


@pytest.fixture
def unit_params():
    """Round-number base parameters for kernel-level checks."""
    return SpectralDiffusionParams(gamma_sd0=1e6, omega_b=1e10, gamma1_b=1e5, gamma2=1e4)


@pytest.fixture
def small_hahn_dataset(d2):
    """Noise-free D2 Hahn decays: 8 temperatures x 30 delays."""
    params, variant = d2
    spec = SynthDecaySpec(
        params=params,
        variant=variant,
        temperatures=tuple(np.geomspace(0.01, 0.2, 8)),
        delays=tuple(np.linspace(4e-6 / 30, 4e-6, 30)),
        amplitudes=1e-9,
    )
    return generate_decay_dataset(spec)


def make_traces(n_traces=1, noise=0.0, phase=0.0, amplitude=PULSE_AMPLITUDE, seed=0, duration=2e-6):
    spec = SynthTraceSpec(
        dt=PULSE_DT,
        duration=duration,
        amplitude=amplitude,
        center=PULSE_CENTER,
        width=PULSE_WIDTH,
        phase=phase,
        noise_std_per_sample=noise,
        n_traces=n_traces,
        seed=seed,
    )
    return generate_trace_set(spec)


@pytest.fixture
def clean_trace():
    return make_traces()[0]


@pytest.fixture
def noisy_traces():
    """Three echoes at phase 0.4 rad with SNR 100 per sample."""
    return make_traces(n_traces=3, noise=1e-5, phase=0.4, seed=7)


@pytest.fixture
def base_variant():
    return ModelVariant.BASE_INTRINSIC
