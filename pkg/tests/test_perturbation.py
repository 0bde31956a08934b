"""
Unit tests for the perturbative quasienergies, Fourier components and transition probabilities.
"""
import numpy as np
import pytest

from domain.entities.system import Drive, SystemParams
from domain.services.floquet import floquet_modes, s_matrix, zone_distance
from domain.services.model import stationary_basis
from domain.services.perturbation import (
    analytic_fourier_components,
    analytic_s_elements,
    chi_identity_residual,
    chi_table,
    nonresonant_probabilities,
    quasienergy_2nd,
    zeroth_order_quasienergies,
)
from helpers.exceptions.model_exceptions import ZeroBiasException
from helpers.exceptions.perturbation_exceptions import ResonantDenominatorException

GUARD = 1e-6
K_MAX = 35
TOL = 1e-10


class TestChiTable:
    """Test suite for the Bessel-weighted sums lambda and chi."""

    def setup_method(self):
        self.params = SystemParams(eps1=2.24, eps2=4.48, delta1=0.1, delta2=0.15, g=0.15)
        self.drive = Drive(amplitude=5.0, omega=1.0)
        self.table = chi_table(self.params, self.drive, K_MAX, GUARD)

    @pytest.mark.parametrize("m", [1, 2, 3, 4, 5, -2])
    @pytest.mark.parametrize("qubit,sign", [(1, 1), (1, -1), (2, 1), (2, -1)])
    def test_lambda_identity(self, qubit, sign, m):
        """Test sum_n lambda_n lambda_{n-m} against the chi difference."""
        assert chi_identity_residual(self.table, qubit, sign, m) < 1e-9

    @pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
    @pytest.mark.parametrize("qubit,sign", [(1, 1), (2, -1)])
    def test_chi_identity(self, qubit, sign, m):
        """Test that the same identity holds with chi in place of lambda."""
        assert chi_identity_residual(self.table, qubit, sign, m, use_chi=True) < 1e-9

    def test_identity_needs_nonzero_shift(self):
        """Test that m = 0 raises ValueError."""
        with pytest.raises(ValueError):
            chi_identity_residual(self.table, 1, 1, 0)

    def test_lambda_values(self):
        """Test lambda_{1,0}^+ = J_0(5) / (2 (eps1 + g))."""
        from domain.services.numerics import bessel_j
        expected = bessel_j(0, 5.0) / (2 * (2.24 + 0.15))
        assert self.table.lam(1, 0, 1) == pytest.approx(expected)
        assert self.table.lam(1, K_MAX + 1, 1) == 0.0

    def test_truncation_tail_is_tiny(self):
        """Test that the tail estimate is negligible at this cutoff."""
        assert self.table.tail_estimate < 1e-12

    def test_resonant_denominator_names_its_term(self):
        """Test that eps2 + g - omega = 0 is refused with qubit, sign and k."""
        params = self.params.with_values(eps2=0.85)
        with pytest.raises(ResonantDenominatorException) as excinfo:
            chi_table(params, self.drive, K_MAX, GUARD)
        assert (excinfo.value.qubit, excinfo.value.sign, excinfo.value.k) == (2, 1, -1)


class TestQuasienergies:
    """Test suite for second-order quasienergies."""

    def setup_method(self):
        self.drive = Drive(amplitude=5.0, omega=1.0)

    def test_quasienergies_sum_to_zero(self, fig1_params):
        """Test that the unfolded quasienergies add up to zero."""
        table = chi_table(fig1_params, self.drive, K_MAX, GUARD)
        gammas = quasienergy_2nd(fig1_params, self.drive, table, folded=False)
        assert np.sum(gammas) == pytest.approx(0.0, abs=1e-12)

    def test_no_tunnelling_gives_zeroth_order(self, diagonal_params):
        """Test that delta = 0 leaves only the bias and coupling terms."""
        table = chi_table(diagonal_params, self.drive, K_MAX, GUARD)
        gammas = quasienergy_2nd(diagonal_params, self.drive, table, folded=False)
        assert np.allclose(gammas, zeroth_order_quasienergies(diagonal_params))

    def test_folded_values_inside_zone(self, fig1_params):
        """Test that folded quasienergies lie in [-omega/2, omega/2)."""
        table = chi_table(fig1_params, self.drive, K_MAX, GUARD)
        gammas = quasienergy_2nd(fig1_params, self.drive, table)
        assert np.all(gammas >= -0.5) and np.all(gammas < 0.5)

    def test_zero_bias_refused_for_s_elements(self):
        """Test that eps1 = 0 raises ZeroBiasException."""
        params = SystemParams(eps1=0.0, eps2=4.48, delta1=0.1, delta2=0.15, g=0.15)
        table = chi_table(params.with_values(eps1=2.24), self.drive, K_MAX, GUARD)
        with pytest.raises(ZeroBiasException):
            analytic_s_elements(params, self.drive, table, GUARD)


class TestAnalyticTransitions:
    """Test suite for the closed-form S-matrix and probabilities."""

    def setup_method(self):
        self.drive = Drive(amplitude=5.0, omega=1.0)

    def test_s_matrix_structure(self, fig1_params):
        """Test unit row sums, S_23 = 0 and a symmetric Pbar."""
        table = chi_table(fig1_params, self.drive, K_MAX, GUARD)
        result = analytic_s_elements(fig1_params, self.drive, table, GUARD)
        assert np.allclose(result.s.sum(axis=1), 1.0)
        assert result.s[1, 2] == 0.0 and result.s[2, 1] == 0.0
        assert np.allclose(result.pbar, result.pbar.T)

    def test_probabilities_scale_with_splittings(self, fig1_params):
        """Test that P12 and P13 scale as delta^2 and P14 as delta^4."""
        table = chi_table(fig1_params, self.drive, K_MAX, GUARD)
        full = nonresonant_probabilities(fig1_params, self.drive, table, GUARD)
        halved = fig1_params.with_values(delta1=0.05, delta2=0.075)
        half = nonresonant_probabilities(halved, self.drive, chi_table(halved, self.drive, K_MAX, GUARD), GUARD)
        assert full[0] / half[0] == pytest.approx(4.0)
        assert full[1] / half[1] == pytest.approx(4.0)
        assert full[2] / half[2] == pytest.approx(16.0)

    def test_p14_needs_both_qubits_tunnelling(self, fig1_params):
        """Test that delta1 = 0 removes the 1->4 and 1->3 probabilities."""
        params = fig1_params.with_values(delta1=0.0)
        p12, p13, p14 = nonresonant_probabilities(params, self.drive, chi_table(params, self.drive, K_MAX, GUARD), GUARD)
        assert p12 > 0
        assert p13 == 0.0 and p14 == 0.0


@pytest.mark.slow
@pytest.mark.timeout(900)
class TestAgainstNumerics:
    """Test suite comparing perturbative results with the numerical Floquet route."""

    def setup_method(self):
        self.drive = Drive(amplitude=5.0, omega=1.0)

    def _create_solution(self, params: SystemParams):
        return floquet_modes(params, self.drive, TOL, 256, K_MAX, 1e-6, basis=stationary_basis(params))

    def _max_gamma_error(self, params: SystemParams) -> float:
        solution = self._create_solution(params)
        table = chi_table(params, self.drive, K_MAX, GUARD)
        predicted = quasienergy_2nd(params, self.drive, table)
        return float(np.max(zone_distance(solution.gammas - predicted, self.drive.omega)))

    def test_quasienergy_error_is_fourth_order(self, fig1_params):
        """Test that halving both splittings shrinks the quasienergy error about 16 times."""
        full = self._max_gamma_error(fig1_params)
        half = self._max_gamma_error(fig1_params.with_values(delta1=0.05, delta2=0.075))
        assert full < 1e-2
        assert 12.8 < full / half < 19.2

    def test_first_order_components_match(self, fig1_params):
        """Test the single-flip components of mode 1 against the numerical modes."""
        solution = self._create_solution(fig1_params)
        table = chi_table(fig1_params, self.drive, K_MAX, GUARD)
        _, analytic = analytic_fourier_components(fig1_params, self.drive, table, GUARD)
        unfolded = quasienergy_2nd(fig1_params, self.drive, table, folded=False)
        numeric = solution.components_in_zone(1, unfolded[0])
        for component in (1, 2):
            expected = analytic[0, :, component]
            significant = np.abs(expected) > 1e-3
            assert np.any(significant)
            error = np.abs(numeric[significant, component] - expected[significant])
            assert np.all(error <= 0.1 * np.abs(expected[significant]) + 1e-4)

    def test_zeroth_order_component_matches(self, fig1_params):
        """Test that mode 1 keeps its Bessel amplitudes on basis state 1."""
        solution = self._create_solution(fig1_params)
        table = chi_table(fig1_params, self.drive, K_MAX, GUARD)
        _, analytic = analytic_fourier_components(fig1_params, self.drive, table, GUARD)
        unfolded = quasienergy_2nd(fig1_params, self.drive, table, folded=False)
        numeric = solution.components_in_zone(1, unfolded[0])
        assert np.allclose(numeric[:, 0], analytic[0, :, 0], atol=1e-2)

    def test_nonresonant_probabilities_match(self, fig1_params):
        """Test P12 and P13 against the numerical S-matrix within 10 percent."""
        solution = self._create_solution(fig1_params)
        numeric = s_matrix(solution, stationary_basis(fig1_params), 1e-6)
        table = chi_table(fig1_params, self.drive, K_MAX, GUARD)
        p12, p13, _ = nonresonant_probabilities(fig1_params, self.drive, table, GUARD)
        assert p12 == pytest.approx(numeric.probability(1, 2), rel=0.1)
        assert p13 == pytest.approx(numeric.probability(1, 3), rel=0.1)
