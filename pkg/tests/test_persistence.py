import json
import logging

import numpy as np
import pytest

from conftest import make_traces
from tlsecho.model.config import TWO_PI
from tlsecho.model.echo import ModelVariant
from tlsecho.model.errors import SchemaError
from tlsecho.model.fitting import DecayDataset, DecayKind, TemperatureSeries
from tlsecho.model.persistence import (
    DataPersistence,
    read_decay_dataset,
    read_params,
    read_report,
    read_trace_set,
    write_curve_csv,
    write_decay_dataset,
    write_params,
    write_report,
    write_table_csv,
    write_trace_set,
)


def load_json(file_path):
    with open(file_path, encoding="utf-8") as json_file:
        return json.load(json_file)


def save_json(file_path, data):
    with open(file_path, "w", encoding="utf-8") as json_file:
        json.dump(data, json_file)


class TestDataPersistence:

    def test_missing_file(self, tmp_path):
        with pytest.raises(SchemaError, match="does not exist"):
            DataPersistence(str(tmp_path / "absent.json")).load_data()

    def test_malformed_json_names_the_line(self, tmp_path):
        target = tmp_path / "broken.json"
        target.write_text('{\n"a": 1,\n}\n', encoding="utf-8")
        with pytest.raises(SchemaError, match="line"):
            DataPersistence(str(target)).load_data()

    def test_top_level_must_be_an_object(self, tmp_path):
        target = tmp_path / "list.json"
        target.write_text("[1, 2]", encoding="utf-8")
        with pytest.raises(SchemaError):
            DataPersistence(str(target)).load_data()

    def test_save_creates_the_directory(self, tmp_path):
        target = tmp_path / "nested" / "deeper" / "data.json"
        DataPersistence(str(target)).save_data({"b": 2, "a": 1})
        assert load_json(target) == {"a": 1, "b": 2}


class TestParamsFiles:

    def test_round_trip_is_exact(self, tmp_path, d2_refined):
        params, variant = d2_refined
        target = str(tmp_path / "params.json")
        write_params(target, params, variant, device_label="D2")
        loaded = read_params(target)
        assert loaded.params == params
        assert loaded.variant is variant
        assert loaded.device_label == "D2"

    def test_quoted_units(self, tmp_path, d2):
        params, variant = d2
        target = tmp_path / "params.json"
        write_params(str(target), params, variant)
        data = load_json(target)
        assert data["gamma_sd0_over_2pi_hz"] == pytest.approx(743e3)
        assert data["variant"] == variant.value
        assert set(data["exact"]) == set(variant.parameter_names)

    def test_edited_decimal_wins(self, tmp_path, d2, caplog):
        params, variant = d2
        target = tmp_path / "params.json"
        write_params(str(target), params, variant)
        data = load_json(target)
        data["gamma2_over_2pi_hz"] = 12345.0
        save_json(target, data)
        with caplog.at_level(logging.WARNING):
            loaded = read_params(str(target))
        assert loaded.params.gamma2 == pytest.approx(TWO_PI * 12345.0)
        assert "gamma2_over_2pi_hz" in caplog.text

    def test_missing_field(self, tmp_path, d2):
        params, variant = d2
        target = tmp_path / "params.json"
        write_params(str(target), params, variant)
        data = load_json(target)
        del data["omega_b_over_2pi_hz"]
        save_json(target, data)
        with pytest.raises(SchemaError):
            read_params(str(target))

    def test_negative_rate_names_the_field(self, tmp_path, d2):
        params, variant = d2
        target = tmp_path / "params.json"
        write_params(str(target), params, variant)
        data = load_json(target)
        data["gamma1_b_over_2pi_hz"] = -1.0
        save_json(target, data)
        with pytest.raises(SchemaError, match="gamma1_b_over_2pi_hz") as raised:
            read_params(str(target))
        assert raised.value.location.endswith("gamma1_b_over_2pi_hz")

    @pytest.mark.parametrize("field, value", [("kind", "dataset"), ("format_version", 2)])
    def test_header_is_checked(self, tmp_path, d2, field, value):
        params, variant = d2
        target = tmp_path / "params.json"
        write_params(str(target), params, variant)
        data = load_json(target)
        data[field] = value
        save_json(target, data)
        with pytest.raises(SchemaError, match=field):
            read_params(str(target))

    def test_variant_must_match_fields(self, tmp_path, d2):
        params, _ = d2
        target = tmp_path / "params.json"
        write_params(str(target), params)
        data = load_json(target)
        data["variant"] = ModelVariant.REFINED_TEMPERATURE_DEPENDENT.value
        save_json(target, data)
        with pytest.raises(SchemaError, match="variant"):
            read_params(str(target))


class TestDecayFiles:

    def test_round_trip(self, tmp_path, small_hahn_dataset):
        target = str(tmp_path / "decay.json")
        write_decay_dataset(target, small_hahn_dataset)
        assert read_decay_dataset(target) == small_hahn_dataset

    def test_errors_survive(self, tmp_path):
        series = TemperatureSeries(0.05, (1e-6, 2e-6), (1.0, 0.5), errors=(0.1, 0.05), tau=3e-7)
        dataset = DecayDataset(DecayKind.STIMULATED, "lab", (series,))
        target = str(tmp_path / "decay.json")
        write_decay_dataset(target, dataset)
        assert read_decay_dataset(target) == dataset

    def test_partial_errors_are_rejected(self, tmp_path, small_hahn_dataset):
        target = tmp_path / "decay.json"
        write_decay_dataset(str(target), small_hahn_dataset)
        data = load_json(target)
        data["series"][0]["points"][0]["err_Vs"] = 1e-12
        save_json(target, data)
        with pytest.raises(SchemaError, match="err_Vs"):
            read_decay_dataset(str(target))

    def test_stimulated_series_need_tau(self, tmp_path, small_hahn_dataset):
        target = tmp_path / "decay.json"
        write_decay_dataset(str(target), small_hahn_dataset)
        data = load_json(target)
        data["kind"] = "stimulated"
        save_json(target, data)
        with pytest.raises(SchemaError, match=r"series\[0\]\.tau_s"):
            read_decay_dataset(str(target))

    def test_bad_point_is_located(self, tmp_path, small_hahn_dataset):
        target = tmp_path / "decay.json"
        write_decay_dataset(str(target), small_hahn_dataset)
        data = load_json(target)
        data["series"][2]["points"][5]["delay_s"] = "soon"
        save_json(target, data)
        with pytest.raises(SchemaError, match=r"series\[2\]\.points\[5\]\.delay_s"):
            read_decay_dataset(str(target))


class TestTraceFiles:

    def test_round_trip(self, tmp_path, noisy_traces):
        manifest = str(tmp_path / "traces" / "set.json")
        write_trace_set(manifest, noisy_traces)
        assert read_trace_set(manifest) == noisy_traces
        assert (tmp_path / "traces" / "trace_000.csv").exists()

    def test_bad_header(self, tmp_path):
        manifest = str(tmp_path / "set.json")
        write_trace_set(manifest, make_traces())
        csv_path = tmp_path / "trace_000.csv"
        lines = csv_path.read_text(encoding="utf-8").splitlines()
        lines[0] = "time,i,q"
        csv_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        with pytest.raises(SchemaError, match="line 1"):
            read_trace_set(manifest)

    def test_malformed_row(self, tmp_path):
        manifest = str(tmp_path / "set.json")
        write_trace_set(manifest, make_traces())
        csv_path = tmp_path / "trace_000.csv"
        lines = csv_path.read_text(encoding="utf-8").splitlines()
        lines[4] = "0.1,0.2"
        csv_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        with pytest.raises(SchemaError, match="line 5"):
            read_trace_set(manifest)

    def test_missing_member(self, tmp_path):
        manifest = str(tmp_path / "set.json")
        write_trace_set(manifest, make_traces())
        (tmp_path / "trace_000.csv").unlink()
        with pytest.raises(SchemaError, match="does not exist"):
            read_trace_set(manifest)


class TestReports:

    def test_numpy_values_are_plain_json(self, tmp_path):
        target = str(tmp_path / "report.json")
        payload = {"value": np.float64(1.5), "series": np.arange(3), "variant": ModelVariant.BASE_INTRINSIC}
        write_report(target, "model t2", payload)
        report = read_report(target)
        assert report["command"] == "model t2"
        assert report["result"] == {"value": 1.5, "series": [0, 1, 2], "variant": "base"}

    def test_table_and_curve(self, tmp_path):
        table = tmp_path / "table.csv"
        write_table_csv(str(table), ["temperature_k", "t2_s"], [(0.05, 1e-6), (0.1, 5e-7)])
        assert table.read_text(encoding="utf-8").splitlines() == ["temperature_k,t2_s", "0.05,1e-06", "0.1,5e-07"]
        curve = tmp_path / "out" / "curve.csv"
        write_curve_csv(str(curve), ["delay_s", "amplitude_Vs"], np.array([1e-6, 2e-6]), np.array([1.0, 0.5]))
        assert curve.read_text(encoding="utf-8").splitlines()[0] == "delay_s,amplitude_Vs"
