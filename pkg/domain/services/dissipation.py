"""
Lindblad dynamics of the driven pair with qubit-local dephasing, relaxation and excitation.

Density matrices are vectorized row-major, vec(rho)[4 i + j] = rho[i, j], so that
vec(A rho B) = kron(A, B^T) vec(rho).
"""
from __future__ import annotations

import math
from typing import Optional, Tuple

import numpy as np

from domain.entities.dissipation import (
    LindbladOperators,
    PeriodicState,
    PeriodMap,
    Rates,
    TransientAverage,
)
from domain.entities.grid import TimeGrid
from domain.entities.system import Drive, SystemParams
from domain.services.entanglement import concurrence
from domain.services.model import hamiltonian_parts, on_qubit, single_qubit_eigenbasis, stationary_basis
from domain.services.numerics import check_tolerance, integrate_linear
from domain.strategies.steady_state_strategy import ISteadyStateStrategy
from globals import KB_OVER_H_GHZ_PER_K, POSITIVITY_LIMIT, POSITIVITY_WARNING
from helpers.debugger.logger import AbstractLogger
from helpers.exceptions.dissipation_exceptions import (
    InvalidDensityMatrixException,
    InvalidRatesException,
    InvalidTemperatureException,
    PositivityViolationException,
    SteadyStateConvergenceException,
)

DIMENSION = 4
HERMITICITY_LIMIT = 1e-10
TRACE_LIMIT = 1e-9
CONCURRENCE_PERIODS = 64


def lindblad_operators(p: SystemParams) -> LindbladOperators:
    """
    sigma_z = |up><up| - |down><down|, sigma_+ = |up><down| and sigma_- = |down><up| for each
    qubit, in the eigenbasis of the qubit alone (no coupling, no drive), extended to the pair.
    """
    sigma_z, sigma_plus, sigma_minus, gaps = [], [], [], []
    for qubit in (1, 2):
        down, up, gap = single_qubit_eigenbasis(p.eps(qubit), p.delta(qubit))
        sigma_z.append(on_qubit(np.outer(up, up.conj()) - np.outer(down, down.conj()), qubit))
        sigma_plus.append(on_qubit(np.outer(up, down.conj()), qubit))
        sigma_minus.append(on_qubit(np.outer(down, up.conj()), qubit))
        gaps.append(gap)
    return LindbladOperators(tuple(sigma_z), tuple(sigma_plus), tuple(sigma_minus), tuple(gaps))


def bath_temperature(kelvin: float) -> float:
    """Bath temperature in frequency units (GHz), tau_B = (k_B / h) T."""
    if not (math.isfinite(kelvin) and kelvin > 0):
        raise InvalidTemperatureException(f"Temperature must be positive, got {kelvin}")
    return KB_OVER_H_GHZ_PER_K * kelvin


def excitation_rate(gamma_down: float, gap: float, tau_b: float) -> float:
    """Detailed balance, gamma_up = gamma_down exp(-gap / tau_B)."""
    if not (math.isfinite(tau_b) and tau_b > 0):
        raise InvalidTemperatureException(f"Bath temperature must be positive, got {tau_b}")
    return gamma_down * math.exp(-gap / tau_b)


def rates_from_temperature(p: SystemParams, rates: Rates) -> Rates:
    """
    Rates at one parameter point. With a bath temperature set, excitation rates follow from
    detailed balance at each qubit's own gap; otherwise the rates are returned unchanged.
    """
    if rates.tau_b is None:
        return rates
    gaps = [single_qubit_eigenbasis(p.eps(q), p.delta(q))[2] for q in (1, 2)]
    return rates.with_excitation(
        tuple(excitation_rate(rates.gamma_down[q], gaps[q], rates.tau_b) for q in range(2))
    )


def _left(a: np.ndarray) -> np.ndarray:
    return np.kron(a, np.eye(DIMENSION))


def _right(b: np.ndarray) -> np.ndarray:
    return np.kron(np.eye(DIMENSION), b.T)


def dissipator(a: np.ndarray) -> np.ndarray:
    """Superoperator of D[a] rho = a rho a^dagger - {a^dagger a, rho} / 2."""
    number = a.conj().T @ a
    return np.kron(a, a.conj()) - 0.5 * (_left(number) + _right(number))


def commutator(h: np.ndarray) -> np.ndarray:
    """Superoperator of -i [H, rho]."""
    return -1j * (_left(h) - _right(h))


def liouvillian_parts(p: SystemParams, rates: Rates) -> Tuple[np.ndarray, np.ndarray]:
    """
    Split the Liouvillian as L(t) = L_static + v(t) L_drive.
    Args:
        p (SystemParams): System parameters.
        rates (Rates): Rates with the excitation rates already resolved.
    Returns:
        Tuple[np.ndarray, np.ndarray]: 16x16 static and drive superoperators.
    """
    static, drive = hamiltonian_parts(p)
    generator = commutator(static)
    if not rates.is_closed:
        ops = lindblad_operators(p)
        for q in range(2):
            generator = generator + (
                rates.gamma_phi[q] * dissipator(ops.sigma_z[q])
                + rates.gamma_down[q] * dissipator(ops.sigma_minus[q])
                + rates.gamma_up[q] * dissipator(ops.sigma_plus[q])
            )
    return generator, commutator(drive)


def validate_density_matrix(rho: np.ndarray) -> np.ndarray:
    """
    Check shape, Hermiticity, unit trace and positivity of a density matrix.
    Raises:
        InvalidDensityMatrixException: With the first violated property.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (DIMENSION, DIMENSION):
        raise InvalidDensityMatrixException(f"Expected a 4x4 matrix, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > HERMITICITY_LIMIT:
        raise InvalidDensityMatrixException("Density matrix is not Hermitian")
    if abs(np.trace(rho) - 1) > TRACE_LIMIT:
        raise InvalidDensityMatrixException(f"Density matrix trace is {np.trace(rho).real:.12f}")
    if np.min(np.linalg.eigvalsh(rho)) < -POSITIVITY_WARNING:
        raise InvalidDensityMatrixException("Density matrix has negative eigenvalues")
    return rho


def _hermitize(rhos: np.ndarray) -> np.ndarray:
    return 0.5 * (rhos + np.swapaxes(rhos.conj(), -1, -2))


def check_positivity(rhos: np.ndarray, context: str) -> float:
    """
    Smallest eigenvalue over a stack of density matrices.

    Excursions below -POSITIVITY_WARNING are logged; below -POSITIVITY_LIMIT they abort.
    """
    minimum = float(np.min(np.linalg.eigvalsh(_hermitize(rhos))))
    if minimum < -POSITIVITY_LIMIT:
        raise PositivityViolationException(
            f"Density matrix eigenvalue {minimum:.3e} below -{POSITIVITY_LIMIT:g} in {context}",
            min_eigenvalue=minimum,
        )
    if minimum < -POSITIVITY_WARNING:
        AbstractLogger.get_instance().warning(
            "Small positivity excursion in density matrix",
            module="dissipation",
            metadata={"context": context, "min_eigenvalue": minimum},
        )
    return minimum


def _generator(p: SystemParams, d: Drive, rates: Rates):
    static, drive = liouvillian_parts(p, rates_from_temperature(p, rates))

    def generator(t: float) -> np.ndarray:
        return static + d.field(t) * drive

    return generator


def evolve_master(
    p: SystemParams,
    d: Drive,
    rates: Rates,
    rho0: np.ndarray,
    t0: float,
    t1: float,
    tol: float,
    t_eval: Optional[np.ndarray] = None,
) -> np.ndarray:
    """
    Integrate the master equation from rho(t0) = rho0.

    Args:
        p (SystemParams): System parameters.
        d (Drive): Drive.
        rates (Rates): Dissipation rates.
        rho0 (np.ndarray): Valid initial density matrix.
        t0, t1 (float): Integration window.
        tol (float): Integrator tolerance.
        t_eval (Optional[np.ndarray]): Sample times; by default only rho(t1) is returned.
    Returns:
        np.ndarray: rho(t1), or the stack of rho at every sample time.
    Raises:
        PositivityViolationException: If an eigenvalue drops below -POSITIVITY_LIMIT.
    """
    check_tolerance(tol)
    rho0 = validate_density_matrix(rho0)
    times = np.array([t1]) if t_eval is None else np.asarray(t_eval, dtype=float)
    vectors = integrate_linear(_generator(p, d, rates), rho0.ravel(), t0, t1, tol, t_eval=times)
    rhos = _hermitize(vectors.reshape(-1, DIMENSION, DIMENSION))
    check_positivity(rhos, "master equation propagation")
    return rhos[-1] if t_eval is None else rhos


def one_period_map(p: SystemParams, d: Drive, rates: Rates, tol: float, n_samples: int) -> PeriodMap:
    """
    Vectorized propagator of the master equation over one drive period.

    Args:
        p (SystemParams): System parameters.
        d (Drive): Drive.
        rates (Rates): Dissipation rates.
        tol (float): Integrator tolerance.
        n_samples (int): Period grid size.
    Returns:
        PeriodMap: Full-period map and the propagators at every grid time.
    """
    check_tolerance(tol)
    grid = TimeGrid(period=d.period, n_samples=n_samples)
    times = np.append(grid.samples, grid.period)
    identity = np.eye(DIMENSION * DIMENSION, dtype=complex)
    stack = integrate_linear(_generator(p, d, rates), identity, 0.0, grid.period, tol, t_eval=times)
    return PeriodMap(grid=grid, generator=stack[-1], snapshots=stack[:-1])


def periodic_steady_state(
    p: SystemParams,
    d: Drive,
    rates: Rates,
    tol: float,
    n_samples: int,
    strategy: ISteadyStateStrategy,
    fallback: Optional[ISteadyStateStrategy] = None,
) -> PeriodicState:
    """
    Unique periodic steady state rho_T(t) on the period grid.

    Args:
        p (SystemParams): System parameters.
        d (Drive): Drive.
        rates (Rates): Rates with at least one nonzero relaxation rate.
        tol (float): Integrator tolerance, also the fixed-point residual target.
        n_samples (int): Period grid size.
        strategy (ISteadyStateStrategy): Fixed-point solver tried first.
        fallback (Optional[ISteadyStateStrategy]): Solver used when the first one fails.
    Returns:
        PeriodicState: rho_T at every grid time and its smallest eigenvalue.
    Raises:
        InvalidRatesException: If no relaxation rate is positive.
        SteadyStateConvergenceException: If every solver fails.
    """
    if not rates.relaxing:
        raise InvalidRatesException("Periodic steady state needs a nonzero relaxation rate")
    period_map = one_period_map(p, d, rates, tol, n_samples)
    try:
        x = strategy.solve(period_map.generator, tol)
    except SteadyStateConvergenceException as exc:
        if fallback is None:
            raise
        AbstractLogger.get_instance().warning(
            "Fixed-point solve failed, falling back to long propagation",
            module="dissipation",
            metadata={"residual": exc.residual, "params": p.to_dict()},
            error=exc,
        )
        x = fallback.solve(period_map.generator, tol)

    rhos = _hermitize((period_map.snapshots @ x).reshape(-1, DIMENSION, DIMENSION))
    rhos = rhos / np.trace(rhos, axis1=1, axis2=2).real[:, np.newaxis, np.newaxis]
    minimum = check_positivity(rhos, "periodic steady state")
    return PeriodicState(grid=period_map.grid, rhos=rhos, min_eigenvalue=minimum)


def populations(rhos: np.ndarray, basis: np.ndarray) -> np.ndarray:
    """<beta| rho |beta> for every density matrix in the stack, shape (n, 4)."""
    return np.einsum("bi,jik,bk->jb", basis.conj(), rhos, basis).real


def averaged_probabilities_dissipative(state: PeriodicState, basis: Optional[np.ndarray] = None) -> np.ndarray:
    """
    Period-averaged populations of the steady state. The steady state forgets the initial
    label, so the result holds for every initial state.
    Returns:
        np.ndarray: P_beta for beta = 1..4.
    """
    return np.mean(populations(state.rhos, basis if basis is not None else np.eye(DIMENSION)), axis=0)


def _power_sum(matrix: np.ndarray, n: int) -> Tuple[np.ndarray, np.ndarray]:
    """(M^n, sum_{m<n} M^m) by binary splitting."""
    identity = np.eye(matrix.shape[0], dtype=complex)
    power, total = identity, np.zeros_like(identity)
    base_power, base_sum = matrix.astype(complex), identity
    while n:
        if n & 1:
            total = total + power @ base_sum
            power = power @ base_power
        base_sum = base_sum + base_power @ base_sum
        base_power = base_power @ base_power
        n >>= 1
    return power, total


def pulse_duration(rates: Rates) -> float:
    """tau = 1 / sqrt(Gamma Gamma_phi), inside the window 1/Gamma < tau < 1/Gamma_phi."""
    gamma = max(rates.gamma_down)
    gamma_phi = max(rates.gamma_phi)
    if gamma <= 0 or gamma_phi <= 0:
        raise InvalidRatesException("Pulse window needs positive relaxation and dephasing rates")
    return 1.0 / math.sqrt(gamma * gamma_phi)


def transient_average(
    p: SystemParams,
    d: Drive,
    rates: Rates,
    initial_index: int,
    tol: float,
    n_samples: int,
    basis: Optional[np.ndarray] = None,
) -> TransientAverage:
    """
    Populations and concurrence averaged over one pulse, starting from a basis state.

    The pulse length is rounded up to whole periods. Populations are averaged exactly;
    the concurrence is averaged over at most CONCURRENCE_PERIODS evenly spaced periods.

    Args:
        p (SystemParams): System parameters.
        d (Drive): Drive.
        rates (Rates): Rates with positive relaxation and dephasing.
        initial_index (int): Initial basis label, 1..4.
        tol (float): Integrator tolerance.
        n_samples (int): Period grid size.
        basis (Optional[np.ndarray]): Basis as rows; the stationary basis by default.
    Returns:
        TransientAverage: Averaged populations, averaged concurrence and the pulse length.
    """
    duration = pulse_duration(rates)
    basis = stationary_basis(p) if basis is None else basis
    state = basis[initial_index - 1]
    x0 = np.outer(state, state.conj()).ravel()

    period_map = one_period_map(p, d, rates, tol, n_samples)
    n_periods = max(1, int(math.ceil(duration / period_map.grid.period)))
    _, summed = _power_sum(period_map.generator, n_periods)
    mean_rhos = (period_map.snapshots @ (summed @ x0) / n_periods).reshape(-1, DIMENSION, DIMENSION)
    probabilities = np.mean(populations(_hermitize(mean_rhos), basis), axis=0)

    picks = np.unique(np.linspace(0, n_periods - 1, min(n_periods, CONCURRENCE_PERIODS)).astype(int))
    values = []
    for n in picks:
        start = np.linalg.matrix_power(period_map.generator, int(n)) @ x0
        rhos = _hermitize((period_map.snapshots @ start).reshape(-1, DIMENSION, DIMENSION))
        check_positivity(rhos, "transient propagation")
        values.append(np.mean(concurrence(rhos)))
    return TransientAverage(
        probabilities=probabilities,
        concurrence=float(np.mean(values)),
        duration=duration,
    )
