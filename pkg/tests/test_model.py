"""
Unit tests for the two-qubit Hamiltonian and its stationary bases.
"""
import numpy as np
import pytest

from domain.entities.system import Drive, SystemParams
from domain.services.model import (
    SIGMA_X,
    SIGMA_Z,
    uncoupled_energies,
    weak_coupling_validity,
    hamiltonian_at,
    hamiltonian_parts,
    on_qubit,
    single_qubit_eigenbasis,
    stationary_basis,
    uncoupled_eigensystem,
)
from helpers.exceptions.model_exceptions import InvalidParametersException, ZeroBiasException


class TestHamiltonian:
    """Test suite for the driven pair Hamiltonian."""

    def test_diagonal_entries_without_tunnelling(self):
        """Test the static diagonal in basis order for eps1 = 1, eps2 = 2, g = 0.5."""
        static, _ = hamiltonian_parts(SystemParams(eps1=1.0, eps2=2.0, delta1=0.0, delta2=0.0, g=0.5))
        assert np.allclose(np.diag(static).real, [-1.75, 0.75, -0.25, 1.25])
        assert np.allclose(static, np.diag(np.diag(static)))

    def test_drive_operator_acts_on_both_biases(self):
        """Test that v(t) multiplies -(Z1 + Z2) / 2."""
        _, drive = hamiltonian_parts(SystemParams(0.3, 0.4, 0.1, 0.1, 0.0))
        assert np.allclose(np.diag(drive).real, [-1.0, 0.0, 0.0, 1.0])

    def test_hamiltonian_is_hermitian(self, fig1_params, fig1_drive):
        """Test Hermiticity at an arbitrary time."""
        h = hamiltonian_at(fig1_params, fig1_drive, 0.37)
        assert np.allclose(h, h.conj().T)

    def test_qubit_one_is_left_factor(self):
        """Test that qubit 1 operators act on the left tensor factor."""
        assert np.allclose(on_qubit(SIGMA_X, 1), np.kron(SIGMA_X, np.eye(2)))
        assert np.allclose(on_qubit(SIGMA_Z, 2), np.kron(np.eye(2), SIGMA_Z))

    def test_non_finite_parameters_rejected(self):
        """Test that NaN parameters raise InvalidParametersException."""
        with pytest.raises(InvalidParametersException):
            SystemParams(eps1=float("nan"), eps2=0.0, delta1=0.0, delta2=0.0, g=0.0)

    def test_negative_splitting_rejected(self):
        """Test that negative tunnel splittings raise InvalidParametersException."""
        with pytest.raises(InvalidParametersException):
            SystemParams(eps1=1.0, eps2=1.0, delta1=-0.1, delta2=0.0, g=0.0)

    def test_drive_phase_range(self):
        """Test that phi0 outside [0, 2 pi) raises InvalidParametersException."""
        with pytest.raises(InvalidParametersException):
            Drive(amplitude=1.0, omega=1.0, phi0=2 * np.pi)
        with pytest.raises(InvalidParametersException):
            Drive(amplitude=1.0, omega=0.0)


class TestStationaryBasis:
    """Test suite for single-qubit and pair eigenbases."""

    def setup_method(self):
        self.params = SystemParams(eps1=1.0, eps2=2.0, delta1=0.01, delta2=0.01, g=0.0)

    def test_single_qubit_states_are_eigenstates(self):
        """Test that down and up carry energies -/+ gap / 2."""
        down, up, gap = single_qubit_eigenbasis(0.4, 0.3)
        h = -0.5 * (0.4 * SIGMA_Z + 0.3 * SIGMA_X)
        assert gap == pytest.approx(0.5)
        assert np.allclose(h @ down, -0.25 * down)
        assert np.allclose(h @ up, 0.25 * up)

    def test_zero_bias_and_splitting_rejected(self):
        """Test that eps = delta = 0 raises ZeroBiasException."""
        with pytest.raises(ZeroBiasException):
            single_qubit_eigenbasis(0.0, 0.0)

    def test_rows_are_orthonormal_eigenstates(self):
        """Test that every row diagonalises the uncoupled static Hamiltonian."""
        params = SystemParams(eps1=-0.6, eps2=0.8, delta1=0.3, delta2=0.2, g=0.0)
        basis = stationary_basis(params)
        static, _ = hamiltonian_parts(params)
        assert np.allclose(basis @ basis.conj().T, np.eye(4))
        for row in basis:
            energy = row.conj() @ static @ row
            assert np.allclose(static @ row, energy * row)

    def test_no_tunnelling_gives_computational_basis(self):
        """Test that delta = 0 reduces the stationary basis to the identity."""
        basis = stationary_basis(SystemParams(eps1=-0.5, eps2=0.5, delta1=0.0, delta2=0.0, g=0.2))
        assert np.allclose(basis, np.eye(4))

    def test_uncoupled_energies_sum_rules(self):
        """Test E1 + E4 = E2 + E3 = 0."""
        energies = uncoupled_energies(SystemParams(1.3, 0.7, 0.2, 0.1, 0.0))
        assert energies[0] + energies[3] == pytest.approx(0.0)
        assert energies[1] + energies[2] == pytest.approx(0.0)

    def test_uncoupled_energies_match_exact_spectrum(self):
        """Test that second-order energies agree with the exact uncoupled energies."""
        exact = [
            -0.5 * (np.hypot(1.0, 0.01) + np.hypot(2.0, 0.01)),
            -0.5 * (np.hypot(1.0, 0.01) - np.hypot(2.0, 0.01)),
        ]
        energies = uncoupled_energies(self.params)
        assert energies[0] == pytest.approx(exact[0], abs=1e-8)
        assert energies[1] == pytest.approx(exact[1], abs=1e-8)

    def test_perturbative_states_overlap_exact_states(self):
        """Test that the expanded states are close to the exact stationary basis."""
        states, _ = uncoupled_eigensystem(self.params)
        overlaps = np.abs(np.sum(states.conj() * stationary_basis(self.params), axis=1))
        assert np.all(overlaps > 1 - 1e-6)

    def test_perturbative_states_need_bias(self):
        """Test that eps1 = 0 raises ZeroBiasException."""
        with pytest.raises(ZeroBiasException):
            uncoupled_eigensystem(SystemParams(0.0, 1.0, 0.1, 0.1, 0.0))

    def test_weak_coupling_validity(self):
        """Test the small-parameter check on coupling and splittings."""
        assert weak_coupling_validity(SystemParams(2.0, 4.0, 0.1, 0.15, 0.15), 0.5)
        assert not weak_coupling_validity(SystemParams(0.2, 4.0, 0.1, 0.15, 0.15), 0.5)
        assert not weak_coupling_validity(SystemParams(0.0, 4.0, 0.1, 0.15, 0.15), 0.5)
