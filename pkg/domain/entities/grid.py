from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from helpers.exceptions.numerics_exceptions import InvalidTimeGridException


@dataclass(frozen=True)
class TimeGrid:
    """Uniform sampling of one drive period, t_j = j T / N for j = 0..N-1."""
    period: float
    n_samples: int

    def __post_init__(self) -> None:
        if not (math.isfinite(self.period) and self.period > 0):
            raise InvalidTimeGridException()
        n = self.n_samples
        if n < 1 or n & (n - 1):
            raise InvalidTimeGridException(f"Sample count must be a power of two, got {n}")

    @classmethod
    def for_cutoff(cls, period: float, n_samples: int, k_max: int) -> TimeGrid:
        """
        Build a grid that resolves harmonics up to k_max.
        Args:
            period (float): Drive period T.
            n_samples (int): Requested number of samples (power of two).
            k_max (int): Largest harmonic index that must be represented.
        Returns:
            TimeGrid: The validated grid.
        Raises:
            InvalidTimeGridException: If n_samples < 4 * k_max.
        """
        if n_samples < 4 * k_max:
            raise InvalidTimeGridException(
                f"{n_samples} samples cannot resolve harmonics up to {k_max}; need at least {4 * k_max}"
            )
        return cls(period=period, n_samples=n_samples)

    @property
    def omega(self) -> float:
        return 2.0 * math.pi / self.period

    @property
    def step(self) -> float:
        return self.period / self.n_samples

    @property
    def samples(self) -> np.ndarray:
        return np.arange(self.n_samples) * self.step

    @property
    def nyquist(self) -> int:
        return self.n_samples // 2

    def to_dict(self) -> dict:
        return {"period": self.period, "n_samples": self.n_samples}
