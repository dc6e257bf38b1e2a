""" Test validity checks """

import numpy as np

from fermiqs.constants import UNBOUNDED
from fermiqs.exceptions import DomainError
from fermiqs.geometry import FermiFrameSample
from fermiqs.quantum import (WaveFunction, hydrogen_validity, unruh_temperature,
                             validity_report)

from ...global_test_imports import pytest
from ...shared.constants import HYDROGEN


class TestValidityReport(object):
    """Test Class: localization and energy checks """

    @staticmethod
    def test_inertial_is_always_localized():
        """Test: a = 0, lambda_R = 0

        Assertions
        ----------
        - bound should be unbounded and localized_ok true
        """

        report = validity_report(1e6, FermiFrameSample(), 1.0, 0.0)

        assert report.bound == UNBOUNDED
        assert report.localized_ok

    @staticmethod
    @pytest.mark.parametrize('a, bound, localized', [
        (0.5, 2.0, True),
        (2.0, 0.5, False)
    ])
    def test_ground_state_against_acceleration(a, bound, localized):
        """Test: unit oscillator ground state, localization 1

        Assertions
        ----------
        - bound should be 1/a
        - localized_ok should follow localization < bound
        """

        report = validity_report(1.0, FermiFrameSample.uniform_acceleration(a), 1.0, 0.5)

        assert report.bound == pytest.approx(bound)
        assert report.localized_ok is localized

    @staticmethod
    def test_energy_ratio_threshold():
        """Test: <H_NR> / m against the threshold

        Assertions
        ----------
        - 0.5 / 1 should fail the default threshold
        - 0.5 / 100 should pass the default and fail a stricter one
        """

        frame = FermiFrameSample()

        assert not validity_report(1.0, frame, 1.0, 0.5).nonrelativistic_ok
        assert validity_report(1.0, frame, 100.0, 0.5).nonrelativistic_ok
        assert not validity_report(1.0, frame, 100.0, 0.5, threshold=1e-3).nonrelativistic_ok
        pytest.raises(DomainError, validity_report, 1.0, frame, 0.0, 0.5)

    @staticmethod
    def test_grid_state_localization(flat_grid, gaussian):
        """Test: localization from a grid state

        Assertions
        ----------
        - localization should be sqrt(<x^2>) = 1/sqrt(2)
        """

        psi = WaveFunction.from_function(flat_grid, gaussian)
        report = validity_report(psi, FermiFrameSample.uniform_acceleration(1.0), 1.0, 0.5)

        assert report.localization == pytest.approx(np.sqrt(0.5), rel=1e-8)
        assert report.localized_ok


class TestHydrogenValidity(object):
    """Test Class: hydrogen atom size against acceleration """

    @staticmethod
    def test_threshold_near_reference():
        """Test: n = 1 in flat spacetime

        Assertions
        ----------
        - threshold should be within a factor 3 of 1e25 m/s^2
        - extent should be twice the Bohr radius over the fine structure constant
        """

        result = hydrogen_validity(1, 0.0)

        reference = HYDROGEN['REFERENCE_THRESHOLD']

        assert reference / 3 < result.threshold < 3 * reference
        assert result.extent == pytest.approx(1.45e-8, rel=1e-2)

    @staticmethod
    @pytest.mark.parametrize('a_si, valid', [(1e20, True), (1e27, False)])
    def test_acceleration(a_si, valid):
        """Test: n = 1 at moderate and extreme acceleration

        Assertions
        ----------
        - valid should match the threshold comparison
        """

        assert hydrogen_validity(1, a_si).valid is valid

    @staticmethod
    def test_flat_inertial_valid_for_all_levels():
        """Test: a = 0, lambda_R = 0

        Assertions
        ----------
        - every level up to the guard should be valid
        - threshold should scale as 1/n^2
        """

        for n in (1, 10, 1000, 10 ** 6):
            assert hydrogen_validity(n, 0.0).valid
        assert hydrogen_validity(10, 0.0).threshold == pytest.approx(
            hydrogen_validity(1, 0.0).threshold / 100.0)

    @staticmethod
    def test_curvature_contributes():
        """Test: tidal eigenvalue in SI units

        Assertions
        ----------
        - a large lambda_R should invalidate an otherwise valid atom
        """

        assert not hydrogen_validity(1, 0.0, lambda_r_si=1e18).valid

    @staticmethod
    @pytest.mark.parametrize('args', [(0, 1.0), (10 ** 6 + 1, 1.0), (1, -1.0), (1, 1.0, -1.0)])
    def test_invalid_inputs(args):
        """Test: invalid levels and negative inputs

        Assertions
        ----------
        - DomainError should be raised
        """

        pytest.raises(DomainError, hydrogen_validity, *args)


class TestUnruhTemperature(object):
    """Test Class: Unruh temperature """

    @staticmethod
    def test_value():
        """Test: T = hbar a / (2 pi c k_B)

        Assertions
        ----------
        - 1 m/s^2 should give about 4.055e-21 K
        - temperature should be linear in a
        """

        assert unruh_temperature(1.0) == pytest.approx(4.055e-21, rel=1e-3)
        assert unruh_temperature(1e20) == pytest.approx(1e20 * unruh_temperature(1.0))
