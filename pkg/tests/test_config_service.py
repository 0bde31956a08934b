"""
Unit tests for configuration validation and SweepConfig construction.
"""
import pytest

from application.services import ConfigService
from helpers.enums.sweep_mode import SweepMode
from helpers.enums.sweep_parameter import SweepParameter
from helpers.exceptions.config_exceptions import InvalidConfigKeyException, InvalidConfigValueException

BASE = {
    "delta1": "0.1",
    "delta2": "0.15",
    "g": "0.15",
    "amplitude": "5",
    "omega": "1",
    "ratio": "2",
    "axis1": "eps1:0.5:3:11",
}


class TestConfigService:
    """Test suite for ConfigService."""

    def setup_method(self):
        self.service = ConfigService()

    def _create_config(self, mode: SweepMode = SweepMode.SWEEP1D, workers: int = 1, **changes):
        raw = {**BASE, **{key: str(value) for key, value in changes.items()}}
        raw = {key: value for key, value in raw.items() if value != "None"}
        return self.service.build(raw, mode, "out.csv", workers)

    def _assert_rejected(self, key: str, mode: SweepMode = SweepMode.SWEEP1D, **changes):
        with pytest.raises(InvalidConfigValueException) as excinfo:
            self._create_config(mode, **changes)
        assert excinfo.value.key == key

    def test_valid_sweep(self):
        """Test that a complete 1D configuration builds a SweepConfig."""
        config = self._create_config()
        assert config.axes[0].parameter == SweepParameter.EPS1
        assert config.axes[0].n_points == 11
        assert config.ratio == 2.0
        assert config.drive.amplitude == 5.0
        assert config.rates is None
        assert config.overlay is True

    def test_unknown_key(self):
        """Test that an unknown key raises InvalidConfigKeyException naming it."""
        with pytest.raises(InvalidConfigKeyException) as excinfo:
            self._create_config(bogus=1)
        assert excinfo.value.key == "bogus"

    def test_malformed_axis(self):
        """Test that an axis without four fields is rejected."""
        self._assert_rejected("axis1", axis1="eps1:0:3")

    def test_unknown_axis_parameter(self):
        """Test that axes over unknown parameters are rejected."""
        self._assert_rejected("axis1", axis1="phi0:0:1:5")

    def test_single_point_axis(self):
        """Test that an axis needs at least two points."""
        self._assert_rejected("axis1", axis1="eps1:0:3:1")

    def test_non_positive_frequency(self):
        """Test that omega <= 0 is rejected."""
        self._assert_rejected("omega", omega=0)

    def test_tolerance_range(self):
        """Test that tolerances above 1e-6 are rejected."""
        self._assert_rejected("tol", tol=1e-3)

    def test_sample_count_power_of_two(self):
        """Test that n_samples must be a power of two."""
        self._assert_rejected("n_samples", n_samples=1000)

    def test_map_needs_two_axes(self):
        """Test that map modes need a second axis."""
        self._assert_rejected("axis2", mode=SweepMode.SWEEP2D)

    def test_same_parameter_twice(self):
        """Test that both axes must sweep different parameters."""
        self._assert_rejected("axis2", mode=SweepMode.SWEEP2D, axis2="eps1:0:1:3")

    def test_ratio_conflicts_with_eps2_axis(self):
        """Test that eps2 cannot be swept while linked to eps1."""
        self._assert_rejected("ratio", mode=SweepMode.SWEEP2D, axis2="eps2:0:1:3")

    def test_coupling_map_sweeps_g(self):
        """Test that gmap requires a g axis."""
        self._assert_rejected("axis2", mode=SweepMode.GMAP, axis2="amplitude:0:1:3")
        config = self._create_config(SweepMode.GMAP, axis2="g:-0.3:0.3:7")
        assert config.axes[1].parameter == SweepParameter.G

    def test_negative_splitting_axis(self):
        """Test that delta axes cannot reach negative values."""
        self._assert_rejected("axis1", axis1="delta1:-0.1:0.1:3")

    def test_workers_must_be_positive(self):
        """Test that zero workers are rejected."""
        self._assert_rejected("workers", workers=0)

    def test_dissipative_rates(self):
        """Test that shared rates fill both qubits and per-qubit keys override them."""
        config = self._create_config(SweepMode.DISSIPATIVE, gamma_down=0.01, gamma_down2=0.03, gamma_phi=0.001)
        assert config.rates.gamma_down == (0.01, 0.03)
        assert config.rates.gamma_phi == (0.001, 0.001)
        assert config.rates.tau_b is None

    def test_dissipative_needs_relaxation(self):
        """Test that the dissipative mode needs a positive gamma_down."""
        self._assert_rejected("gamma_down", mode=SweepMode.DISSIPATIVE, gamma_phi=0.01)

    def test_transient_needs_dephasing(self):
        """Test that the transient window needs a positive gamma_phi."""
        self._assert_rejected("gamma_phi", mode=SweepMode.DISSIPATIVE, gamma_down=0.01, transient="true")

    def test_temperature_in_millikelvin(self):
        """Test that temperature_mk becomes a bath temperature in frequency units."""
        config = self._create_config(SweepMode.DISSIPATIVE, gamma_down=0.01, temperature_mk=30)
        assert config.rates.tau_b == pytest.approx(0.62509857)

    def test_temperature_conflicts(self):
        """Test that temperature_mk and tau_b are mutually exclusive, as are gamma_up and a bath."""
        self._assert_rejected("tau_b", mode=SweepMode.DISSIPATIVE, gamma_down=0.01, temperature_mk=30, tau_b=0.5)
        self._assert_rejected("gamma_up1", mode=SweepMode.DISSIPATIVE, gamma_down=0.01, tau_b=0.5, gamma_up1=0.001)

    def test_load_applies_overrides(self, write_config):
        """Test that --set values replace file values."""
        text = "\n".join(f"{key} = {value}" for key, value in BASE.items())
        path = write_config(text)
        config = self.service.load(path, ["g=0.2", "overlay=false"], SweepMode.SWEEP1D, "out.csv", 2)
        assert config.params.g == pytest.approx(0.2)
        assert config.overlay is False
        assert config.workers == 2
