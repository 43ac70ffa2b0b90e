import os

import numpy as np
import pytest

from tlsecho.model.errors import DomainError
from tlsecho.model.utils import (
    THREADS_ENV_VAR,
    as_output,
    chunk_bounds,
    ordered_map,
    resolve_workers,
    substream,
    validate_array,
    validate_float,
    validate_seed,
)


class TestWorkers:

    def test_explicit_count_wins(self, monkeypatch):
        monkeypatch.setenv(THREADS_ENV_VAR, "7")
        assert resolve_workers(3) == 3

    def test_environment_variable(self, monkeypatch):
        monkeypatch.setenv(THREADS_ENV_VAR, "5")
        assert resolve_workers() == 5

    def test_auto_uses_the_cpu_count(self, monkeypatch):
        monkeypatch.setenv(THREADS_ENV_VAR, "auto")
        assert resolve_workers() == (os.cpu_count() or 1)

    @pytest.mark.parametrize("value", ["0", "many"])
    def test_bad_environment_value(self, monkeypatch, value):
        monkeypatch.setenv(THREADS_ENV_VAR, value)
        with pytest.raises(DomainError):
            resolve_workers()

    def test_ordered_map_keeps_input_order(self):
        assert ordered_map(lambda item: item * item, list(range(50)), workers=4) == [item * item for item in range(50)]

    def test_substreams_depend_only_on_seed_and_index(self):
        first = substream(9, 2).random(4)
        assert np.array_equal(first, substream(9, 2).random(4))
        assert not np.array_equal(first, substream(9, 3).random(4))

    def test_chunk_bounds(self):
        assert chunk_bounds(10, 4) == [range(0, 4), range(4, 8), range(8, 10)]
        assert chunk_bounds(0, 4) == []


class TestValidation:

    def test_float_bounds(self):
        assert validate_float("2.5", "x", minimum=0.0) == 2.5
        assert validate_float(0.0, "x", minimum=0.0) == 0.0
        with pytest.raises(DomainError, match="x must be > 0"):
            validate_float(0.0, "x", minimum=0.0, strict=True)
        with pytest.raises(DomainError):
            validate_float(3.0, "x", maximum=2.0)

    @pytest.mark.parametrize("value", [float("nan"), float("inf"), "abc", None])
    def test_float_rejects_non_numbers(self, value):
        with pytest.raises(DomainError):
            validate_float(value, "x")

    def test_array_reports_the_offending_value(self):
        with pytest.raises(DomainError, match="-2.0"):
            validate_array([1.0, -2.0], "delays", minimum=0.0)

    @pytest.mark.parametrize("seed", [True, -1, 2 ** 64, 1.5])
    def test_seed_rejects(self, seed):
        with pytest.raises(DomainError):
            validate_seed(seed)

    def test_seed_accepts_numpy_integers(self):
        assert validate_seed(np.uint64(2 ** 64 - 1)) == 2 ** 64 - 1

    def test_as_output(self):
        assert isinstance(as_output(1.0, np.array(2.0)), float)
        assert isinstance(as_output([1.0], np.array([2.0])), np.ndarray)
