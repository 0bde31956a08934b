from __future__ import annotations

from typing import Optional

from helpers.exceptions.base import ApplicationException


class IntegrationFailureException(ApplicationException):
    """The adaptive integrator could not reach the requested tolerance."""

    def __init__(self, message: Optional[str] = None, achieved_error: float = float("nan")) -> None:
        self.achieved_error = achieved_error
        super().__init__(message)


class NyquistViolationException(ApplicationException):
    """Requested harmonics exceed the Nyquist limit of the time grid."""


class InvalidTimeGridException(ApplicationException):
    """Time grid needs a positive period and a power-of-two sample count."""


class InvalidToleranceException(ApplicationException):
    """Integrator tolerance outside the supported range."""
