"""
Strategy interface for extracting the periodic steady state of a one-period map.
"""
from abc import ABC, abstractmethod
from typing import Optional

import numpy as np


class ISteadyStateStrategy(ABC):
    """
    Interface for strategies that find the fixed point of a trace-preserving one-period map.

    The map acts on row-major vectorized 4x4 density matrices.
    """

    @abstractmethod
    def solve(self, period_map: np.ndarray, tol: float, initial: Optional[np.ndarray] = None) -> np.ndarray:
        """
        Find vec(rho) with period_map @ vec(rho) = vec(rho) and unit trace.

        Args:
            period_map: 16x16 one-period superoperator.
            tol: Target residual ||period_map x - x||_1.
            initial: Optional starting density matrix, vectorized.

        Returns:
            np.ndarray: The vectorized fixed point.

        Raises:
            SteadyStateConvergenceException: If no fixed point is found within tolerance.
        """
        raise NotImplementedError()
