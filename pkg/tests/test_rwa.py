"""
Unit tests for the resonant closed forms: photon numbers, Rabi frequencies and line shapes.
"""
import math

import numpy as np
import pytest

from domain.entities.system import Drive, SystemParams
from domain.services.floquet import floquet_modes, fold, s_matrix
from domain.services.model import stationary_basis
from domain.services.rwa import (
    LorentzianProfile,
    channel,
    detuning,
    lorentzian_profile,
    measure_peak,
    nearest_channels,
    nearest_photon_number,
    profile_value,
    rabi_inverse_channel,
    rabi_two_level,
)
from helpers.enums.channel_kind import ChannelKind
from helpers.exceptions.perturbation_exceptions import PoleProximityException
from helpers.exceptions.rwa_exceptions import UnknownChannelException

BESSEL_ZERO = 2.404825557695773


class TestPhotonNumbers:
    """Test suite for detuning and nearest photon numbers."""

    def test_detuning_examples(self):
        """Test K and delta for values above and below zero."""
        k, delta = detuning(5.15, 1.0)
        assert k == -5 and delta == pytest.approx(0.15)
        k, delta = detuning(-2.4, 1.0)
        assert k == 2 and delta == pytest.approx(-0.4)

    def test_detuning_on_resonance(self):
        """Test that integer multiples of omega give zero detuning."""
        k, delta = detuning(6.0, 2.0)
        assert k == -3 and delta == pytest.approx(0.0)

    def test_detuning_half_integer_folds_down(self):
        """Test that exact halves give the detuning -omega/2, never +omega/2."""
        assert detuning(2.5, 1.0) == (-3, pytest.approx(-0.5))
        assert detuning(-1.5, 1.0) == (1, pytest.approx(-0.5))

    @pytest.mark.parametrize("value", [2.5, -1.5, 0.49, 5.15, -7.0, 3.999])
    def test_detuning_matches_floquet_zone(self, value):
        """Test that the detuning equals the folded value for the same omega."""
        k, delta = detuning(value, 2.0)
        assert delta == pytest.approx(float(fold(value, 2.0)), abs=1e-12)
        assert -1.0 <= delta < 1.0

    def test_detuning_needs_positive_omega(self):
        """Test that omega <= 0 raises ValueError."""
        with pytest.raises(ValueError):
            detuning(1.0, 0.0)

    def test_nearest_photon_number_ties_prefer_small_k(self):
        """Test that exact halves choose the photon number closer to zero."""
        assert nearest_photon_number(0.5, 1.0) == 0
        assert nearest_photon_number(-1.5, 1.0) == 1
        assert nearest_photon_number(6.72, 1.0) == -7


class TestRabiFrequencies:
    """Test suite for effective Rabi frequencies."""

    def setup_method(self):
        self.params = SystemParams(eps1=2.85, eps2=5.7, delta1=0.1, delta2=0.15, g=0.15)
        self.drive = Drive(amplitude=5.0, omega=1.0)

    def test_undriven_two_level_channel(self):
        """Test that A = 0 gives Omega_0 = Delta_2 / 2 on resonance."""
        params = SystemParams(eps1=1.0, eps2=0.3, delta1=0.1, delta2=0.2, g=0.0)
        omega0 = rabi_two_level(ChannelKind.ONE_TO_TWO, params, Drive(amplitude=0.0, omega=1.0))
        assert omega0 == pytest.approx(0.1)

    def test_bessel_zero_suppresses_channel(self):
        """Test coherent destruction of tunnelling at a zero of J_0."""
        params = SystemParams(eps1=1.0, eps2=0.3, delta1=0.1, delta2=0.2, g=0.0)
        drive = Drive(amplitude=BESSEL_ZERO, omega=1.0)
        assert rabi_two_level(ChannelKind.ONE_TO_TWO, params, drive) == pytest.approx(0.0, abs=1e-12)

    def test_one_to_three_uses_first_qubit(self):
        """Test Omega_0 = Delta_1 J_{-3}(5) / 2 at eps1 + g = 3."""
        omega0 = rabi_two_level(ChannelKind.ONE_TO_THREE, self.params, self.drive)
        assert omega0 == pytest.approx(0.05 * -0.364831230613667, rel=1e-9)

    def test_one_to_four_is_not_two_level(self):
        """Test that the 1->4 channel raises UnknownChannelException."""
        with pytest.raises(UnknownChannelException):
            rabi_two_level(ChannelKind.ONE_TO_FOUR, self.params, self.drive)

    def test_uncoupled_inverse_channel_closes(self):
        """Test that g = 0 gives Omega_0 = 0 for the 1->4 channel."""
        params = self.params.with_values(g=0.0)
        omega0, _ = rabi_inverse_channel(params, self.drive, -9, 35)
        assert omega0 == 0.0

    def test_inverse_channel_scales_with_splittings(self):
        """Test that halving both splittings divides Omega_0 and delta_0 by four."""
        omega_full, shift_full = rabi_inverse_channel(self.params, self.drive, -9, 35)
        halved = self.params.with_values(delta1=0.05, delta2=0.075)
        omega_half, shift_half = rabi_inverse_channel(halved, self.drive, -9, 35)
        assert omega_full / omega_half == pytest.approx(4.0)
        assert shift_full / shift_half == pytest.approx(4.0)

    def test_pole_proximity_refused(self):
        """Test that eps1 + k omega = g raises PoleProximityException."""
        params = SystemParams(eps1=1.15, eps2=3.0, delta1=0.1, delta2=0.1, g=0.15)
        with pytest.raises(PoleProximityException) as excinfo:
            rabi_inverse_channel(params, self.drive, -4, 35)
        assert excinfo.value.qubit == 1 and excinfo.value.k == -1

    def test_channels_pick_nearest_photon_numbers(self):
        """Test the photon numbers of all three channels out of state 1."""
        one_two, one_three, one_four = nearest_channels(self.params, self.drive, 35)
        assert (one_two.k, one_three.k, one_four.k) == (-6, -3, -9)
        assert one_three.delta == pytest.approx(0.0, abs=1e-12)
        assert one_four.delta == pytest.approx(-0.45)
        assert one_two.delta0 == 0.0


class TestLorentzian:
    """Test suite for the averaged resonance line shape."""

    def test_peak_and_half_width(self):
        """Test height 1/2 at delta_0 and 1/4 at one half width away."""
        profile = LorentzianProfile(omega0=0.01, delta0=0.002)
        assert profile(0.002) == pytest.approx(0.5)
        assert profile(0.002 + profile.hwhm) == pytest.approx(0.25)
        assert profile(10.0) < 1e-5

    def test_sign_of_rabi_frequency_irrelevant(self):
        """Test that the line shape is even in Omega_0."""
        assert LorentzianProfile(0.02)(0.013) == pytest.approx(LorentzianProfile(-0.02)(0.013))

    def test_zero_rabi_frequency(self):
        """Test that Omega_0 = 0 gives an identically zero profile."""
        profile = LorentzianProfile(0.0)
        assert profile.is_zero
        assert profile(0.0) == 0.0
        assert np.all(profile(np.linspace(-1, 1, 5)) == 0.0)

    def test_profile_of_resonant_channel(self):
        """Test that a channel on resonance sits on top of its line."""
        params = SystemParams(eps1=2.85, eps2=5.7, delta1=0.1, delta2=0.15, g=0.15)
        resonant = channel(ChannelKind.ONE_TO_THREE, params, Drive(5.0, 1.0), 35)
        assert profile_value(resonant) == pytest.approx(0.5)
        assert lorentzian_profile(resonant).hwhm == pytest.approx(resonant.hwhm)


class TestMeasurePeak:
    """Test suite for scanning and measuring peaks."""

    def test_measures_lorentzian(self):
        """Test centre, height and half width of an analytic line."""
        profile = LorentzianProfile(omega0=0.01, delta0=0.003)
        result = measure_peak(profile, center=0.0, hwhm=0.02)
        assert result.center == pytest.approx(0.003, abs=5e-4)
        assert result.height == pytest.approx(0.5, abs=5e-3)
        assert result.hwhm == pytest.approx(0.02, rel=0.05)

    def test_missing_crossing_gives_nan(self):
        """Test that a flat profile has no measurable width."""
        result = measure_peak(lambda x: 1.0, center=0.0, hwhm=0.1)
        assert math.isnan(result.hwhm)

    def test_hwhm_estimate_must_be_positive(self):
        """Test that a zero width estimate raises ValueError."""
        with pytest.raises(ValueError):
            measure_peak(lambda x: 1.0, center=0.0, hwhm=0.0)


@pytest.mark.slow
@pytest.mark.timeout(1800)
class TestNumericalLineShape:
    """Test suite comparing a numerical resonance with its Lorentzian prediction."""

    def setup_method(self):
        self.drive = Drive(amplitude=5.0, omega=1.0)
        self.params = SystemParams(eps1=2.85, eps2=5.7, delta1=0.1, delta2=0.15, g=0.15)

    def _probability(self, eps1: float) -> float:
        params = self.params.with_values(eps1=eps1, eps2=2 * eps1)
        solution = floquet_modes(params, self.drive, 1e-9, 256, 35, 1e-6, basis=stationary_basis(params))
        return s_matrix(solution, stationary_basis(params), 1e-5).probability(1, 3)

    def test_one_to_three_peak_matches_lorentzian(self):
        """Test position, height and half width of the K = -3 line in P13."""
        predicted = channel(ChannelKind.ONE_TO_THREE, self.params, self.drive, 35)
        result = measure_peak(self._probability, center=2.85, hwhm=predicted.hwhm)
        assert result.center == pytest.approx(2.85, abs=0.02)
        assert result.height == pytest.approx(0.5, abs=0.05)
        assert result.hwhm == pytest.approx(predicted.hwhm, rel=0.15)
