"""
Unit tests for the numerical kernels: Bessel functions, propagation and Fourier analysis.
"""
import numpy as np
import pytest
from scipy.linalg import expm

from domain.entities.grid import TimeGrid
from domain.entities.system import SystemParams
from domain.services.model import hamiltonian_parts
from domain.services.numerics import (
    bessel_j,
    bessel_table,
    check_tolerance,
    fourier_components,
    nearest_unitary,
    propagate,
    propagate_on_grid,
    synthesize,
    unitarity_defect,
)
from helpers.exceptions.numerics_exceptions import (
    InvalidTimeGridException,
    InvalidToleranceException,
    NyquistViolationException,
)


class TestBessel:
    """Test suite for integer-order Bessel functions."""

    def test_negative_odd_order_flips_sign_exactly(self):
        """Test that J_{-n} = -J_n holds bit for bit for odd n."""
        assert bessel_j(-3, 2.5) == -bessel_j(3, 2.5)

    def test_negative_even_order_is_symmetric(self):
        """Test that J_{-n} = J_n for even n."""
        assert bessel_j(-4, 2.5) == bessel_j(4, 2.5)

    def test_values_at_origin(self):
        """Test J_0(0) = 1 and J_n(0) = 0 otherwise."""
        assert bessel_j(0, 0.0) == pytest.approx(1.0)
        assert bessel_j(3, 0.0) == pytest.approx(0.0)

    def test_non_integer_order_rejected(self):
        """Test that fractional orders raise ValueError."""
        with pytest.raises(ValueError):
            bessel_j(0.5, 1.0)

    def test_squares_sum_to_one(self):
        """Test the completeness relation sum_k J_k(x)^2 = 1."""
        _, values = bessel_table(5.0, 40)
        assert np.sum(values ** 2) == pytest.approx(1.0, abs=1e-12)

    def test_table_orders_are_symmetric(self):
        """Test that bessel_table returns orders -k_max..k_max."""
        orders, values = bessel_table(1.0, 3)
        assert orders.tolist() == [-3, -2, -1, 0, 1, 2, 3]
        assert values.shape == (7,)


class TestPropagation:
    """Test suite for unitary propagation of the Schrodinger equation."""

    def setup_method(self):
        self.static, _ = hamiltonian_parts(
            SystemParams(eps1=0.7, eps2=-0.4, delta1=0.3, delta2=0.2, g=0.1)
        )

    def test_static_hamiltonian_matches_matrix_exponential(self):
        """Test that a time-independent H gives exp(-i H t)."""
        result = propagate(lambda t: self.static, np.eye(4), 0.0, 3.0, 1e-10)
        assert np.allclose(result, expm(-3.0j * self.static), atol=1e-8)

    def test_chunked_propagation_stays_unitary(self):
        """Test that propagation over many periods keeps U unitary."""
        result = propagate(lambda t: self.static, np.eye(4), 0.0, 50.0, 1e-10, period=2 * np.pi)
        assert unitarity_defect(result) < 1e-10
        assert np.allclose(result, expm(-50.0j * self.static), atol=1e-7)

    def test_grid_samples_follow_static_evolution(self):
        """Test that every grid sample equals the exact propagator."""
        times = np.linspace(0.5, 2.0, 4)
        stack = propagate_on_grid(lambda t: self.static, np.eye(4), 0.0, times, 1e-10)
        for t, u in zip(times, stack):
            assert np.allclose(u, expm(-1j * t * self.static), atol=1e-8)

    def test_tolerance_outside_range_rejected(self):
        """Test that tolerances outside [1e-13, 1e-6] raise InvalidToleranceException."""
        with pytest.raises(InvalidToleranceException):
            check_tolerance(1e-3)
        with pytest.raises(InvalidToleranceException):
            propagate(lambda t: self.static, np.eye(4), 0.0, 1.0, 1e-15)

    def test_nearest_unitary_keeps_unitaries(self):
        """Test that projecting a unitary returns it unchanged."""
        u = expm(-1j * self.static)
        assert np.allclose(nearest_unitary(u), u, atol=1e-12)


class TestFourier:
    """Test suite for Fourier analysis on a period grid."""

    def setup_method(self):
        self.grid = TimeGrid(period=2 * np.pi, n_samples=16)

    def _create_signal(self, harmonic: int) -> np.ndarray:
        return np.exp(1j * harmonic * self.grid.omega * self.grid.samples)[:, np.newaxis]

    def test_single_harmonic_has_unit_component(self):
        """Test that exp(3 i omega t) has component one at k = 3 only."""
        harmonics, components = fourier_components(self._create_signal(3), (-5, 5), self.grid)
        expected = (harmonics == 3).astype(float)
        assert np.allclose(components[:, 0], expected, atol=1e-12)

    def test_nyquist_index_rejected(self):
        """Test that asking for |k| >= N/2 raises NyquistViolationException."""
        with pytest.raises(NyquistViolationException):
            fourier_components(self._create_signal(1), (-8, 8), self.grid)

    def test_wrong_sample_count_rejected(self):
        """Test that a signal not matching the grid raises ValueError."""
        with pytest.raises(ValueError):
            fourier_components(np.zeros((8, 1)), (-2, 2), self.grid)

    def test_synthesize_rebuilds_band_limited_signal(self):
        """Test that synthesize inverts fourier_components for a band-limited signal."""
        signal = 0.5 * self._create_signal(2) - 0.25j * self._create_signal(-1)
        harmonics, components = fourier_components(signal, (-4, 4), self.grid)
        assert np.allclose(synthesize(harmonics, components, self.grid), signal, atol=1e-12)


class TestTimeGrid:
    """Test suite for period grids."""

    def test_sample_count_must_be_power_of_two(self):
        """Test that 12 samples raise InvalidTimeGridException."""
        with pytest.raises(InvalidTimeGridException):
            TimeGrid(period=1.0, n_samples=12)

    def test_cutoff_needs_four_samples_per_harmonic(self):
        """Test that for_cutoff requires n_samples >= 4 k_max."""
        with pytest.raises(InvalidTimeGridException):
            TimeGrid.for_cutoff(1.0, 64, 17)
        assert TimeGrid.for_cutoff(1.0, 64, 16).n_samples == 64

    def test_samples_cover_one_period(self):
        """Test that samples start at zero and stop one step short of T."""
        grid = TimeGrid(period=2.0, n_samples=8)
        assert grid.samples[0] == 0.0
        assert grid.samples[-1] == pytest.approx(2.0 - 0.25)
        assert grid.nyquist == 4
