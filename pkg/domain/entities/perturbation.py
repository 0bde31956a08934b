from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def _sign_index(sign: int) -> int:
    return 0 if sign > 0 else 1


@dataclass(frozen=True)
class ChiTable:
    """
    Bessel-weighted sums lambda_{qk}^{+-} and chi_{qk}^{+-} for |k| <= K_max.

    Arrays are indexed [qubit - 1, sign index (0 for +, 1 for -), k + K_max].
    """
    lambdas: np.ndarray
    chis: np.ndarray
    k_max: int
    omega: float
    tail_estimate: float

    @property
    def harmonics(self) -> np.ndarray:
        return np.arange(-self.k_max, self.k_max + 1)

    def lam(self, qubit: int, k: int, sign: int) -> float:
        if abs(k) > self.k_max:
            return 0.0
        return float(self.lambdas[qubit - 1, _sign_index(sign), k + self.k_max])

    def chi(self, qubit: int, k: int, sign: int) -> float:
        if abs(k) > self.k_max:
            return 0.0
        return float(self.chis[qubit - 1, _sign_index(sign), k + self.k_max])

    def lambda_series(self, qubit: int, sign: int) -> np.ndarray:
        return self.lambdas[qubit - 1, _sign_index(sign)]

    def chi_series(self, qubit: int, sign: int) -> np.ndarray:
        return self.chis[qubit - 1, _sign_index(sign)]
