"""
Numerical Floquet analysis of the driven pair.
"""
from __future__ import annotations

from typing import Optional, Tuple

import numpy as np
from scipy.linalg import schur
from scipy.optimize import linear_sum_assignment

from domain.entities.floquet import FloquetSolution, TransitionTable
from domain.entities.grid import TimeGrid
from domain.entities.system import Drive, SystemParams
from domain.services.model import computational_basis, hamiltonian_function, stationary_basis
from domain.services.numerics import fourier_components, propagate, propagate_on_grid
from helpers.debugger.logger import AbstractLogger
from helpers.exceptions.floquet_exceptions import EigenDecompositionException, RouteDisagreementException

NORMALITY_LIMIT = 1e-6


def fold(value, omega: float):
    """Map quasienergies into the Floquet zone [-omega/2, omega/2)."""
    return value - omega * np.floor(value / omega + 0.5)


def zone_distance(value, omega: float):
    """Distance of value to the nearest integer multiple of omega."""
    return np.abs(fold(value, omega))


def harmonic_cutoff(d: Drive, margin: int) -> int:
    return d.harmonic_cutoff(margin)


def monodromy(p: SystemParams, d: Drive, tol: float) -> np.ndarray:
    """
    One-period propagator U(T, 0) with the drive phase set to zero.
    """
    zero_phase = d.with_phase(0.0)
    return propagate(hamiltonian_function(p, zero_phase), np.eye(4), 0.0, zero_phase.period, tol)


def _label_by_basis(vectors: np.ndarray, basis: np.ndarray) -> np.ndarray:
    weights = np.abs(basis.conj() @ vectors) ** 2
    rows, cols = linear_sum_assignment(-weights)
    order = np.empty(len(rows), dtype=int)
    order[rows] = cols
    return order


def eigensystem(matrix: np.ndarray, omega: float, basis: Optional[np.ndarray] = None) -> Tuple[np.ndarray, np.ndarray]:
    """
    Quasienergies and eigenvectors of a monodromy matrix.

    Eigenvectors are labelled so that vector alpha carries the largest weight on basis state alpha,
    and their phase makes that component real and positive.

    Args:
        matrix (np.ndarray): Unitary one-period propagator.
        omega (float): Drive frequency.
        basis (Optional[np.ndarray]): Labelling basis as rows; the computational basis by default.
    Returns:
        Tuple[np.ndarray, np.ndarray]: Folded quasienergies (4,) and eigenvectors as columns (4, 4).
    Raises:
        EigenDecompositionException: If the Schur form is not diagonal within tolerance.
    """
    triangular, vectors = schur(matrix, output="complex")
    off_diagonal = np.max(np.abs(np.triu(triangular, k=1))) if len(matrix) > 1 else 0.0
    if off_diagonal > NORMALITY_LIMIT:
        raise EigenDecompositionException(
            f"Monodromy is not normal within tolerance (off-diagonal {off_diagonal:.3e})"
        )
    period = 2 * np.pi / omega
    gammas = fold(-np.angle(np.diag(triangular)) / period, omega)

    basis = computational_basis() if basis is None else basis
    order = _label_by_basis(vectors, basis)
    gammas = gammas[order]
    vectors = vectors[:, order]
    for alpha in range(vectors.shape[1]):
        anchor = basis[alpha].conj() @ vectors[:, alpha]
        if abs(anchor) > 0:
            vectors[:, alpha] *= abs(anchor) / anchor
    return gammas, vectors


def quasienergies(matrix: np.ndarray, omega: float) -> np.ndarray:
    """Quasienergies gamma_alpha = (i/T) log(eigenvalue), folded into [-omega/2, omega/2)."""
    return eigensystem(matrix, omega)[0]


def track_branches(previous_vectors: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    """
    Permutation that keeps eigenvector branches continuous between neighbouring sweep points.
    Args:
        previous_vectors (np.ndarray): Eigenvectors at the previous point, as columns.
        vectors (np.ndarray): Eigenvectors at the current point, as columns.
    Returns:
        np.ndarray: perm such that vectors[:, perm[a]] continues previous branch a.
    """
    overlaps = np.abs(previous_vectors.conj().T @ vectors) ** 2
    rows, cols = linear_sum_assignment(-overlaps)
    perm = np.empty(len(rows), dtype=int)
    perm[rows] = cols
    return perm


def is_resonant(gammas: np.ndarray, omega: float, tolerance: float) -> bool:
    n = len(gammas)
    for a in range(n):
        for b in range(a + 1, n):
            if zone_distance(gammas[a] - gammas[b], omega) < tolerance * omega:
                return True
    return False


def floquet_modes(
    p: SystemParams,
    d: Drive,
    tol: float,
    n_samples: int,
    k_max: int,
    resonance_tolerance: float,
    basis: Optional[np.ndarray] = None,
) -> FloquetSolution:
    """
    Floquet modes u_alpha(t) = exp(i gamma_alpha t) U(t, 0) v_alpha on a period grid.

    Args:
        p (SystemParams): System parameters.
        d (Drive): Drive; its phase is replaced by zero.
        tol (float): Integrator tolerance.
        n_samples (int): Grid size, a power of two of at least 4 k_max.
        k_max (int): Harmonic cutoff for the Fourier components.
        resonance_tolerance (float): Near-degeneracy threshold, relative to omega.
        basis (Optional[np.ndarray]): Labelling basis for the modes.
    Returns:
        FloquetSolution: Quasienergies, sampled modes and Fourier components.
    """
    zero_phase = d.with_phase(0.0)
    grid = TimeGrid.for_cutoff(zero_phase.period, n_samples, k_max)
    times = np.append(grid.samples, grid.period)
    propagators = propagate_on_grid(hamiltonian_function(p, zero_phase), np.eye(4), 0.0, times, tol)

    gammas, vectors = eigensystem(propagators[-1], grid.omega, basis)
    phases = np.exp(1j * np.outer(gammas, grid.samples))
    # modes[alpha, j, :] = exp(i gamma_alpha t_j) U(t_j) v_alpha
    modes = phases[:, :, np.newaxis] * np.einsum("jab,bc->cja", propagators[:-1], vectors)

    fourier = []
    harmonics = np.arange(-k_max, k_max + 1)
    for alpha in range(4):
        harmonics, components = fourier_components(modes[alpha], (-k_max, k_max), grid)
        fourier.append(components)

    resonant = is_resonant(gammas, grid.omega, resonance_tolerance)
    if resonant:
        AbstractLogger.get_instance().debug(
            "Near-degenerate quasienergies; averaged probabilities are unreliable",
            module="floquet",
            metadata={"gammas": gammas.tolist(), "params": p.to_dict()},
        )
    return FloquetSolution(
        gammas=gammas,
        grid=grid,
        modes=modes,
        harmonics=harmonics,
        fourier=np.array(fourier),
        resonant=resonant,
    )


def s_matrix(sol: FloquetSolution, basis: np.ndarray, agreement: float) -> TransitionTable:
    """
    Time-averaged overlaps S_{alpha x} and averaged probabilities Pbar = S^T S.

    S is evaluated from the Fourier components and, independently, as a time average over the grid.

    Args:
        sol (FloquetSolution): Floquet decomposition.
        basis (np.ndarray): Basis states as rows.
        agreement (float): Largest accepted difference between the two evaluations.
    Returns:
        TransitionTable: S and Pbar, carrying the resonant flag of the solution.
    Raises:
        RouteDisagreementException: If the two evaluations differ by more than `agreement`.
    """
    projector = basis.conj().T
    from_fourier = np.sum(np.abs(sol.fourier @ projector) ** 2, axis=1)
    from_time = np.mean(np.abs(sol.modes @ projector) ** 2, axis=1)
    difference = float(np.max(np.abs(from_fourier - from_time)))
    if difference > agreement:
        raise RouteDisagreementException(
            f"S-matrix routes disagree by {difference:.3e}", max_difference=difference
        )
    s = from_fourier
    return TransitionTable(s=s, pbar=s.T @ s, resonant=sol.resonant, route_difference=difference)


def time_domain_oracle(
    p: SystemParams,
    d: Drive,
    a: int,
    b: int,
    n_periods: int,
    n_phases: int,
    tol: float,
    basis: Optional[np.ndarray] = None,
    samples_per_period: int = 32,
) -> float:
    """
    Brute-force average of |<b|U(t0 + t, t0)|a>|^2 over the evolution time and the drive phase.

    For each phase the propagator is integrated over one period; later periods follow from
    powers of the monodromy, so the evolution time runs over n_periods full periods.

    Args:
        p (SystemParams): System parameters.
        d (Drive): Drive; its phase is swept uniformly over n_phases values.
        a, b (int): Initial and final basis labels, 1..4.
        n_periods (int): Number of periods in the time average (>= 100).
        n_phases (int): Number of uniformly spaced drive phases (>= 8).
        tol (float): Integrator tolerance.
        basis (Optional[np.ndarray]): Basis as rows; the stationary basis by default.
        samples_per_period (int): Time samples inside each period.
    Returns:
        float: The averaged transition probability.
    """
    if n_periods < 100 or n_phases < 8:
        raise ValueError("Oracle needs at least 100 periods and 8 phases")
    basis = stationary_basis(p) if basis is None else basis
    initial = basis[a - 1]
    final = basis[b - 1].conj()
    powers = np.arange(n_periods)

    total = 0.0
    for j in range(n_phases):
        phased = d.with_phase(2 * np.pi * j / n_phases)
        period = phased.period
        times = np.append(np.arange(samples_per_period) * period / samples_per_period, period)
        propagators = propagate_on_grid(hamiltonian_function(p, phased), np.eye(4), 0.0, times, tol)
        triangular, vectors = schur(propagators[-1], output="complex")
        eigenvalues = np.diag(triangular)
        coefficients = vectors.conj().T @ initial
        # evolved[:, n] = D^n c in the eigenbasis of the monodromy
        evolved = (eigenvalues[:, np.newaxis] ** powers[np.newaxis, :]) * coefficients[:, np.newaxis]
        rows = final @ (propagators[:-1] @ vectors)
        amplitudes = rows @ evolved
        total += float(np.mean(np.abs(amplitudes) ** 2))
    return total / n_phases
