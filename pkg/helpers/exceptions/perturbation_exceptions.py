from __future__ import annotations

from typing import Optional

from helpers.exceptions.base import ApplicationException


class ResonantDenominatorException(ApplicationException):
    """A perturbative denominator falls inside the resonance guard band."""

    def __init__(self, message: Optional[str] = None, qubit: int = 0, sign: int = 0, k: int = 0) -> None:
        self.qubit = qubit
        self.sign = sign
        self.k = k
        if message is None:
            symbol = "+" if sign > 0 else "-"
            message = f"Resonant denominator {symbol}eps{qubit} + g + k*omega near zero at k={k}"
        super().__init__(message)


class PoleProximityException(ApplicationException):
    """Inverse-channel sum hits a pole (eps + k*omega)^2 = g^2."""

    def __init__(self, message: Optional[str] = None, qubit: int = 0, k: int = 0) -> None:
        self.qubit = qubit
        self.k = k
        if message is None:
            message = f"Pole (eps{qubit} + k*omega)^2 - g^2 near zero at k={k}"
        super().__init__(message)
