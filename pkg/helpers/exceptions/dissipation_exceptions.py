from __future__ import annotations

from typing import Optional

from helpers.exceptions.base import ApplicationException


class InvalidRatesException(ApplicationException):
    """Dissipation rates must be non-negative with at least one nonzero relaxation rate."""


class InvalidTemperatureException(ApplicationException):
    """Bath temperature must be positive; use a zero excitation rate for zero temperature."""


class InvalidDensityMatrixException(ApplicationException):
    """Density matrix must be a Hermitian 4x4 matrix with unit trace."""


class PositivityViolationException(ApplicationException):
    """Density matrix lost positivity beyond tolerance."""

    def __init__(self, message: Optional[str] = None, min_eigenvalue: float = float("nan")) -> None:
        self.min_eigenvalue = min_eigenvalue
        super().__init__(message)


class SteadyStateConvergenceException(ApplicationException):
    """Periodic steady state did not converge within the iteration budget."""

    def __init__(self, message: Optional[str] = None, residual: float = float("nan")) -> None:
        self.residual = residual
        super().__init__(message)
