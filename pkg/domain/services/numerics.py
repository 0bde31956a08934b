"""
Numerical kernels shared by every physics module: Bessel functions, unitary propagation
and discrete Fourier analysis on a period grid.
"""
from __future__ import annotations

from typing import Callable, Iterable, Tuple

import numpy as np
from scipy.integrate import solve_ivp
from scipy.special import jv

from domain.entities.grid import TimeGrid
from helpers.exceptions.numerics_exceptions import (
    IntegrationFailureException,
    InvalidToleranceException,
    NyquistViolationException,
)

MIN_TOLERANCE = 1e-13
MAX_TOLERANCE = 1e-6
ODE_METHOD = "DOP853"


def bessel_j(n, x):
    """
    Bessel function of the first kind J_n(x) for integer orders.

    Negative orders use J_{-n}(x) = (-1)^n J_n(x) so that the parity relation holds exactly.

    Args:
        n: Integer order or array of orders.
        x: Real argument (broadcast against n).
    Returns:
        float or np.ndarray: J_n(x).
    """
    orders = np.asarray(n)
    if not np.issubdtype(orders.dtype, np.integer):
        rounded = np.rint(orders)
        if np.any(rounded != orders):
            raise ValueError("Bessel orders must be integers")
        orders = rounded.astype(np.int64)
    magnitude = np.abs(orders)
    values = jv(magnitude, np.asarray(x, dtype=float))
    sign = np.where((orders < 0) & (magnitude % 2 == 1), -1.0, 1.0)
    result = sign * values
    return float(result) if np.ndim(result) == 0 else result


def bessel_table(x: float, k_max: int) -> Tuple[np.ndarray, np.ndarray]:
    """Orders -k_max..k_max and the corresponding J_k(x)."""
    orders = np.arange(-k_max, k_max + 1)
    return orders, bessel_j(orders, x)


def nearest_unitary(matrices: np.ndarray) -> np.ndarray:
    """Unitary polar factor of a matrix or a stack of matrices."""
    left, _, right = np.linalg.svd(matrices)
    return left @ right


def unitarity_defect(matrix: np.ndarray) -> float:
    identity = np.eye(matrix.shape[-1])
    return float(np.max(np.abs(matrix.conj().T @ matrix - identity)))


def check_tolerance(tol: float) -> None:
    if not MIN_TOLERANCE <= tol <= MAX_TOLERANCE:
        raise InvalidToleranceException(
            f"Tolerance {tol:g} outside [{MIN_TOLERANCE:g}, {MAX_TOLERANCE:g}]"
        )


def integrate_linear(
    generator: Callable[[float], np.ndarray],
    y0: np.ndarray,
    t0: float,
    t1: float,
    tol: float,
    t_eval: np.ndarray | None = None,
) -> np.ndarray:
    """
    Integrate dY/dt = G(t) Y for a square or vector Y.

    Args:
        generator: Callable returning the matrix G(t).
        y0: Initial value.
        t0, t1: Integration window.
        tol: Relative tolerance of the embedded Runge-Kutta pair.
        t_eval: Optional sample times in [t0, t1]; defaults to the end point only.
    Returns:
        np.ndarray: Y at each sample time, stacked along the first axis.
    Raises:
        IntegrationFailureException: If the integrator stops before t1.
    """
    shape = y0.shape

    def rhs(t, y):
        return (generator(t) @ y.reshape(shape)).ravel()

    times = np.array([t1]) if t_eval is None else np.asarray(t_eval, dtype=float)
    if t1 == t0:
        return np.repeat(y0[np.newaxis].astype(complex), len(times), axis=0)

    solution = solve_ivp(
        rhs,
        (t0, t1),
        y0.astype(complex).ravel(),
        method=ODE_METHOD,
        t_eval=times,
        rtol=tol,
        atol=tol,
    )
    if not solution.success:
        last = solution.y[:, -1].reshape(shape) if solution.y.size else y0
        achieved = unitarity_defect(last) if last.ndim == 2 and last.shape[0] == last.shape[1] else float("nan")
        raise IntegrationFailureException(
            f"Integration stopped at t={solution.t[-1] if solution.t.size else t0:.6g}: {solution.message}",
            achieved_error=achieved,
        )
    return np.moveaxis(solution.y, -1, 0).reshape((len(times),) + shape)


def propagate(
    h: Callable[[float], np.ndarray],
    u0: np.ndarray,
    t0: float,
    t1: float,
    tol: float,
    period: float | None = None,
) -> np.ndarray:
    """
    Solve i dU/dt = H(t) U with U(t0) = u0 and return U(t1).

    Long windows are split into chunks of one period; the propagator is projected back onto
    the unitary group after every chunk.

    Args:
        h: Hermitian Hamiltonian as a function of time.
        u0: Initial unitary.
        t0, t1: Integration window.
        tol: Tolerance in [1e-13, 1e-6].
        period: Optional renormalization interval.
    Returns:
        np.ndarray: U(t1).
    """
    check_tolerance(tol)

    def generator(t):
        return -1j * h(t)

    current = np.array(u0, dtype=complex)
    span = t1 - t0
    chunk = abs(span) if not period else period
    n_chunks = max(1, int(np.ceil(abs(span) / chunk - 1e-12))) if span else 1
    edges = np.linspace(t0, t1, n_chunks + 1)
    for start, stop in zip(edges[:-1], edges[1:]):
        current = integrate_linear(generator, current, start, stop, tol)[-1]
        current = nearest_unitary(current)
    return current


def propagate_on_grid(
    h: Callable[[float], np.ndarray],
    u0: np.ndarray,
    t0: float,
    times: Iterable[float],
    tol: float,
) -> np.ndarray:
    """
    Propagator sampled at increasing times, each sample projected onto the unitary group.

    Returns:
        np.ndarray: Stack of U(t_j), shape (len(times), d, d).
    """
    check_tolerance(tol)
    times = np.asarray(list(times), dtype=float)

    def generator(t):
        return -1j * h(t)

    stack = integrate_linear(generator, np.array(u0, dtype=complex), t0, float(times[-1]), tol, t_eval=times)
    return nearest_unitary(stack)


def _harmonic_indices(k_range) -> np.ndarray:
    if isinstance(k_range, tuple) and len(k_range) == 2:
        return np.arange(k_range[0], k_range[1] + 1)
    return np.asarray(list(k_range), dtype=int)


def fourier_components(samples: np.ndarray, k_range, grid: TimeGrid) -> Tuple[np.ndarray, np.ndarray]:
    """
    Fourier components u_k = (1/N) sum_j u(t_j) exp(-i k omega t_j) of a periodic vector signal.

    Args:
        samples: Signal on the grid, shape (n_samples, d).
        k_range: Inclusive (k_min, k_max) pair or an iterable of harmonic indices.
        grid: The period grid the signal is sampled on.
    Returns:
        Tuple[np.ndarray, np.ndarray]: Harmonic indices and components of shape (len(k), d).
    Raises:
        NyquistViolationException: If a requested |k| reaches the Nyquist index.
        ValueError: If the sample count does not match the grid.
    """
    samples = np.asarray(samples)
    if samples.shape[0] != grid.n_samples:
        raise ValueError(f"Expected {grid.n_samples} samples, got {samples.shape[0]}")
    harmonics = _harmonic_indices(k_range)
    if harmonics.size and np.max(np.abs(harmonics)) >= grid.nyquist:
        raise NyquistViolationException(
            f"Harmonic {int(np.max(np.abs(harmonics)))} not below Nyquist index {grid.nyquist}"
        )
    spectrum = np.fft.fft(samples, axis=0) / grid.n_samples
    return harmonics, spectrum[harmonics % grid.n_samples]


def synthesize(harmonics: np.ndarray, components: np.ndarray, grid: TimeGrid) -> np.ndarray:
    """Inverse of `fourier_components`: u(t_j) = sum_k u_k exp(i k omega t_j)."""
    phases = np.exp(1j * np.outer(grid.samples, harmonics) * grid.omega)
    return phases @ components
