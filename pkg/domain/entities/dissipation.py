from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from domain.entities.grid import TimeGrid
from helpers.exceptions.dissipation_exceptions import InvalidRatesException


@dataclass(frozen=True)
class Rates:
    """
    Qubit-local dissipation rates, indexed by qubit (1, 2) -> tuple position (0, 1).

    When `tau_b` is set, excitation rates are derived per parameter point from detailed
    balance and `gamma_up` is ignored.
    """
    gamma_phi: Tuple[float, float] = (0.0, 0.0)
    gamma_down: Tuple[float, float] = (0.0, 0.0)
    gamma_up: Tuple[float, float] = (0.0, 0.0)
    tau_b: Optional[float] = None

    def __post_init__(self) -> None:
        for name in ("gamma_phi", "gamma_down", "gamma_up"):
            values = getattr(self, name)
            if len(values) != 2 or any(not math.isfinite(v) or v < 0 for v in values):
                raise InvalidRatesException(f"{name} must hold two non-negative rates")
        if self.tau_b is not None and not (math.isfinite(self.tau_b) and self.tau_b > 0):
            raise InvalidRatesException("Bath temperature must be positive")

    @property
    def relaxing(self) -> bool:
        return any(rate > 0 for rate in self.gamma_down)

    @property
    def is_closed(self) -> bool:
        return not any(self.gamma_phi) and not any(self.gamma_down) and not any(self.gamma_up)

    def with_excitation(self, gamma_up: Tuple[float, float]) -> Rates:
        return Rates(self.gamma_phi, self.gamma_down, tuple(gamma_up), self.tau_b)

    def to_dict(self) -> dict:
        return {
            "gamma_phi": list(self.gamma_phi),
            "gamma_down": list(self.gamma_down),
            "gamma_up": list(self.gamma_up),
            "tau_b": self.tau_b,
        }


@dataclass(frozen=True)
class PeriodMap:
    """
    Vectorized one-period propagator of the master equation.

    `snapshots[j]` maps vec(rho(0)) to vec(rho(t_j)); `generator` is the full period map.
    Vectorization is row-major, vec(rho)[4 i + j] = rho[i, j].
    """
    grid: TimeGrid
    generator: np.ndarray
    snapshots: np.ndarray


@dataclass(frozen=True)
class PeriodicState:
    """Periodic steady state rho_T(t_j) on the period grid, shape (n_samples, 4, 4)."""
    grid: TimeGrid
    rhos: np.ndarray
    min_eigenvalue: float

    @property
    def initial(self) -> np.ndarray:
        return self.rhos[0]


@dataclass(frozen=True)
class TransientAverage:
    """Pulse-window averages starting from a basis state."""
    probabilities: np.ndarray
    concurrence: float
    duration: float


@dataclass(frozen=True)
class LindbladOperators:
    """
    Qubit-local jump operators on the pair, built from each qubit's own eigenstates.

    Each tuple is indexed by qubit (1, 2) -> position (0, 1).
    """
    sigma_z: Tuple[np.ndarray, np.ndarray]
    sigma_plus: Tuple[np.ndarray, np.ndarray]
    sigma_minus: Tuple[np.ndarray, np.ndarray]
    gaps: Tuple[float, float]
