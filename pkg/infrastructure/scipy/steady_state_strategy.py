"""
Concrete steady-state strategies backed by numpy and scipy.
"""
from typing import Optional

import numpy as np
from scipy.linalg import LinAlgError, solve

from domain.strategies.steady_state_strategy import ISteadyStateStrategy
from helpers.exceptions.dissipation_exceptions import SteadyStateConvergenceException

DIMENSION = 4
TRACE_INDICES = [i * (DIMENSION + 1) for i in range(DIMENSION)]
CHECK_EVERY = 32


def trace_residual(period_map: np.ndarray, x: np.ndarray) -> float:
    """Trace norm of period_map x - x, read as a 4x4 matrix."""
    difference = (period_map @ x - x).reshape(DIMENSION, DIMENSION)
    return float(np.linalg.norm(difference, ord="nuc"))


class PropagatorFixedPointStrategy(ISteadyStateStrategy):
    """
    Solves (Phi - 1) x = 0 directly, with one redundant row replaced by the trace condition.

    Trace preservation makes the rows of Phi - 1 belonging to the diagonal entries linearly
    dependent, so dropping one of them keeps the system complete.
    """

    def solve(self, period_map: np.ndarray, tol: float, initial: Optional[np.ndarray] = None) -> np.ndarray:
        system = period_map - np.eye(period_map.shape[0])
        system[0, :] = 0.0
        system[0, TRACE_INDICES] = 1.0
        rhs = np.zeros(period_map.shape[0], dtype=complex)
        rhs[0] = 1.0
        try:
            x = solve(system, rhs)
        except LinAlgError as exc:
            raise SteadyStateConvergenceException(f"Fixed-point system is singular: {exc}") from exc
        residual = trace_residual(period_map, x)
        if not np.isfinite(residual) or residual > tol:
            raise SteadyStateConvergenceException(
                f"Fixed-point residual {residual:.3e} above tolerance {tol:.1e}", residual=residual
            )
        return x


class LongPropagationStrategy(ISteadyStateStrategy):
    """
    Applies the one-period map repeatedly until consecutive periods agree in trace norm.
    """

    def __init__(self, max_iterations: int) -> None:
        self.max_iterations = max_iterations

    def solve(self, period_map: np.ndarray, tol: float, initial: Optional[np.ndarray] = None) -> np.ndarray:
        if initial is None:
            x = (np.eye(DIMENSION, dtype=complex) / DIMENSION).ravel()
        else:
            x = np.array(initial, dtype=complex).ravel()
        residual = float("inf")
        for iteration in range(1, self.max_iterations + 1):
            if iteration % CHECK_EVERY == 0:
                residual = trace_residual(period_map, x)
                if residual < tol:
                    return x
            x = period_map @ x
        residual = trace_residual(period_map, x)
        if residual < tol:
            return x
        raise SteadyStateConvergenceException(
            f"No periodic steady state after {self.max_iterations} periods", residual=residual
        )
