from __future__ import annotations

from typing import Optional

from helpers.exceptions.base import ApplicationException


class RouteDisagreementException(ApplicationException):
    """Fourier and time-average evaluations of the S-matrix disagree."""

    def __init__(self, message: Optional[str] = None, max_difference: float = float("nan")) -> None:
        self.max_difference = max_difference
        super().__init__(message)


class EigenDecompositionException(ApplicationException):
    """Monodromy matrix could not be diagonalised as a unitary."""
