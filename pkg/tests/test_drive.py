"""Field shapes: exact selection-rule zeros and parameter validation."""

import math

import numpy as np
import pytest

from razavy_dw import DRIVE_KINDS, DriveField, eval_field

RNG = np.random.default_rng(20260817)


class TestShapes:
    def test_none(self):
        assert eval_field(DriveField.none(), 12.3) == (0.0, 0.0)

    def test_sinusoidal_value(self):
        d = DriveField.sinusoidal(0.02, 0.074)
        for t in (0.0, 1.7, 33.3):
            f1, f2 = eval_field(d, t)
            assert f1 == pytest.approx(0.02 * math.sin(0.074 * t), abs=0)
            assert f1 == f2

    def test_symmetric_difference_is_literal_zero(self):
        d = DriveField.sinusoidal(0.05, 0.3)
        for t in RNG.uniform(-50.0, 400.0, size=200):
            f1, f2 = eval_field(d, float(t))
            assert f1 - f2 == 0.0

    def test_antisymmetric_sum_is_literal_zero(self):
        d = DriveField.antisymmetric(0.05, 0.3)
        for t in RNG.uniform(-50.0, 400.0, size=200):
            f1, f2 = eval_field(d, float(t))
            assert f1 + f2 == 0.0

    def test_first_well_only(self):
        d = DriveField.first_well_only(0.02, 0.074)
        f1, f2 = eval_field(d, 7.0)
        assert f1 == pytest.approx(0.02 * math.sin(0.074 * 7.0), abs=0)
        assert f2 == 0.0

    def test_step_is_on_at_zero(self):
        d = DriveField.step(0.01)
        assert eval_field(d, 0.0) == (0.01, 0.01)
        assert eval_field(d, -1e-9) == (0.0, 0.0)
        assert eval_field(d, 250.0) == (0.01, 0.01)

    def test_from_samples_interpolates(self):
        d = DriveField.from_samples([0.0, 1.0, 2.0], [0.0, 1.0, 0.0], [1.0, 1.0, 3.0])
        assert eval_field(d, 0.5) == (0.5, 1.0)
        assert eval_field(d, 1.5) == (0.5, 2.0)
        # constant extrapolation outside the table
        assert eval_field(d, -5.0) == (0.0, 1.0)
        assert eval_field(d, 9.0) == (0.0, 3.0)

    def test_per_well_callables(self):
        d = DriveField.per_well(lambda t: 2.0 * t, lambda t: -t)
        assert eval_field(d, 3.0) == (6.0, -3.0)


class TestValidation:
    def test_kind_catalogue(self):
        assert len(DRIVE_KINDS) == 6
        assert "none" in DRIVE_KINDS

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            DriveField(kind="square-wave")

    def test_negative_amplitude(self):
        with pytest.raises(ValueError):
            DriveField.sinusoidal(-0.01, 0.07)

    @pytest.mark.parametrize("omega", [0.0, -0.1])
    def test_nonpositive_frequency(self, omega):
        with pytest.raises(ValueError):
            DriveField.sinusoidal(0.01, omega)

    def test_zero_amplitude_allowed(self):
        d = DriveField.sinusoidal(0.0, 0.07)
        assert eval_field(d, 10.0) == (0.0, 0.0)

    def test_general_needs_fields(self):
        with pytest.raises(ValueError):
            DriveField(kind="general-per-well")

    def test_bad_sample_tables(self):
        with pytest.raises(ValueError):
            DriveField.from_samples([0.0], [1.0], [1.0])
        with pytest.raises(ValueError):
            DriveField.from_samples([0.0, 1.0], [1.0], [1.0, 2.0])
        with pytest.raises(ValueError):
            DriveField.from_samples([0.0, 0.0], [1.0, 2.0], [1.0, 2.0])
