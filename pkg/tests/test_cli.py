import json

import pytest

from tlsecho.main import run
from tlsecho.model.config import TWO_PI
from tlsecho.model.echo import ModelVariant, SpectralDiffusionParams, preset
from tlsecho.model.persistence import read_params, write_params


def result_of(report_path):
    with open(report_path, encoding="utf-8") as report_file:
        return json.load(report_file)["result"]


class TestExitCodes:

    def test_help(self):
        assert run(["--help"]) == 0

    def test_unknown_flag(self):
        assert run(["model", "t2", "--preset", "D3", "--temp-k", "0.09", "--bogus"]) == 1

    def test_invalid_thread_count(self):
        assert run(["model", "alpha", "--w", "1", "--tau", "1", "--threads", "0"]) == 1

    def test_missing_input_file(self, tmp_path):
        assert run(["fit", "exp", "--input", str(tmp_path / "absent.json")]) == 1

    def test_unresolvable_t2_is_a_numerical_failure(self, tmp_path):
        frozen = SpectralDiffusionParams(gamma_sd0=1e6, omega_b=TWO_PI * 2e9, gamma1_b=1e5, gamma2=0.0)
        params_path = str(tmp_path / "frozen.json")
        write_params(params_path, frozen, ModelVariant.BASE_INTRINSIC)
        assert run(["model", "t2", "--params", params_path, "--temp-k", "0.001"]) == 2

    def test_variant_must_match_the_preset(self):
        assert run(["model", "t2", "--preset", "D3", "--variant", "refined", "--temp-k", "0.09"]) == 1

    def test_synthesis_needs_an_output(self):
        assert run(["synth", "decay", "--preset", "D2"]) == 1

    def test_curve_requested_from_a_command_without_one(self, tmp_path):
        argv = ["simulate", "telegraph", "--w", "1", "--tau", "1", "--histories", "100"]
        assert run(argv + ["--emit-curve", str(tmp_path / "curve.csv")]) == 1

    def test_echo_calibration_needs_its_flags(self):
        assert run(["losses", "efficiency", "--route", "echo-calibration"]) == 1


class TestModelCommands:

    def test_t2_report(self, tmp_path, capsys):
        out = tmp_path / "t2.json"
        assert run(["model", "t2", "--preset", "D3", "--temp-k", "0.09", "--out", str(out)]) == 0
        point = result_of(out)["points"][0]
        assert point["temperature_k"] == 0.09
        assert 0.49e-6 <= point["t2_s"] <= 0.73e-6
        assert "== model t2 ==" in capsys.readouterr().out

    def test_hahn_table(self, tmp_path):
        out = tmp_path / "hahn.csv"
        argv = ["model", "hahn", "--preset", "D2", "--temp-k", "0.05", "--delay", "1e-7", "2e-7"]
        assert run(argv + ["--out", str(out), "--format", "csv"]) == 0
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "delay_s,amplitude_Vs"
        assert len(lines) == 3

    def test_alpha_curve(self, tmp_path):
        curve = tmp_path / "alpha.csv"
        assert run(["model", "alpha", "--w", "1", "--tau", "1", "2", "--emit-curve", str(curve)]) == 0
        lines = curve.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "tau_s,alpha_s"
        assert float(lines[1].split(",")[1]) == pytest.approx(0.672, abs=1e-3)


class TestDecayPipeline:

    def test_synthesize_then_fit(self, tmp_path):
        dataset = str(tmp_path / "decay.json")
        argv = ["synth", "decay", "--preset", "D2", "--temp-k-range", "0.01", "0.2", "6", "--delays", "20"]
        assert run(argv + ["--out", dataset]) == 0

        report = tmp_path / "fit.json"
        params_out = str(tmp_path / "fitted.json")
        argv = ["fit", "global", "--input", dataset, "--starts", "1", "--params-out", params_out]
        assert run(argv + ["--out", str(report)]) == 0
        result = result_of(report)
        assert result["converged"] is True
        assert result["generator_truth"] == pytest.approx(result["params"], rel=1e-6)
        assert len(result["amplitudes"]) == 6

        truth, variant = preset("D2")
        fitted = read_params(params_out)
        assert fitted.variant is variant
        assert fitted.params.gamma_sd0 == pytest.approx(truth.gamma_sd0, rel=1e-6)

    def test_exponential_table(self, tmp_path):
        dataset = str(tmp_path / "decay.json")
        argv = ["synth", "decay", "--preset", "D3", "--temp-k-range", "0.02", "0.1", "3", "--delays", "20"]
        assert run(argv + ["--out", dataset]) == 0
        out = tmp_path / "exp.json"
        assert run(["fit", "exp", "--input", dataset, "--out", str(out)]) == 0
        assert [row["temperature_k"] for row in result_of(out)["series"]] == pytest.approx([0.02, 0.0447214, 0.1])


class TestTracePipeline:

    def test_synthesize_then_integrate(self, tmp_path):
        manifest = str(tmp_path / "traces" / "set.json")
        argv = ["synth", "traces", "--duration", "2e-6", "--amplitude", "1e-3", "--center", "1e-6"]
        argv += ["--width", "50e-9", "--phase", "0.4", "--noise", "1e-5", "--traces", "4", "--seed", "3"]
        assert run(argv + ["--out", manifest]) == 0

        out = tmp_path / "echoes.json"
        assert run(["analyze", "trace", "--input", manifest, "--out", str(out)]) == 0
        result = result_of(out)
        assert len(result["echoes"]) == 4
        assert result["filter"]["phi0_rad"] == pytest.approx(0.4, abs=0.02)
        expected = 1e-3 * 50e-9 * (2 * 3.141592653589793) ** 0.5
        for echo in result["echoes"]:
            assert echo["i_bar_Vs"] == pytest.approx(expected, rel=0.02)

    def test_difference_of_two_traces(self, tmp_path):
        manifest = str(tmp_path / "set.json")
        argv = ["synth", "traces", "--duration", "2e-6", "--amplitude", "1e-3", "--center", "1e-6"]
        assert run(argv + ["--width", "50e-9", "--traces", "2", "--out", manifest]) == 0
        out = tmp_path / "diff.json"
        assert run(["analyze", "diff", "--input", manifest, "--window", "0.5e-6", "1.5e-6", "--out", str(out)]) == 0
        assert result_of(out)["difference_Vs"] == pytest.approx(0.0, abs=1e-18)
        assert run(["analyze", "diff", "--input", manifest, "--window", "0.5e-6", "1.5e-6", "--candidate", "5"]) == 1


class TestLossCommands:

    def test_tan_delta(self, tmp_path):
        out = tmp_path / "tandelta.json"
        assert run(["losses", "tandelta", "--preset", "D2", "--out", str(out)]) == 0
        assert result_of(out)["tan_delta"] == pytest.approx(0.0128, abs=1e-4)

    def test_cascade(self, tmp_path):
        out = tmp_path / "cascade.json"
        assert run(["losses", "cascade", "--tan-delta", "0.012", "--out", str(out)]) == 0
        result = result_of(out)
        assert result["relative_difference"] < 1e-12
        assert 0.0 < result["quantum_efficiency"] < 1.0
        assert result["transmission_over_noise"] > 0.0

    def test_efficiency_report(self, tmp_path):
        out = tmp_path / "efficiency.json"
        assert run(["losses", "efficiency", "--preset", "D2", "--out", str(out)]) == 0
        result = result_of(out)
        assert result["quantum_efficiency"] == pytest.approx(0.534, abs=0.05)
        assert len(result["efficiency_band"]) == 5
