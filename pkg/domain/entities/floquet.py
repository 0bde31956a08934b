from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from domain.entities.grid import TimeGrid


@dataclass(frozen=True)
class FloquetSolution:
    """
    Floquet decomposition of the driven pair for one parameter point.

    State labels alpha = 1..4 map to array index alpha - 1 along the first axis.

    Attributes:
        gammas: Quasienergies folded into [-omega/2, omega/2), shape (4,).
        grid: Period grid the modes are sampled on.
        modes: u_alpha(t_j), shape (4, n_samples, 4).
        harmonics: Harmonic indices k = -K_max..K_max.
        fourier: Components u_{alpha k}, shape (4, 2 K_max + 1, 4).
        resonant: True when two quasienergies are closer than the resonance tolerance modulo omega.
    """
    gammas: np.ndarray
    grid: TimeGrid
    modes: np.ndarray
    harmonics: np.ndarray
    fourier: np.ndarray
    resonant: bool

    @property
    def omega(self) -> float:
        return self.grid.omega

    @property
    def k_max(self) -> int:
        return int(self.harmonics[-1])

    @property
    def vectors(self) -> np.ndarray:
        """Monodromy eigenvectors v_alpha = u_alpha(0) as columns."""
        return self.modes[:, 0, :].T

    def component(self, alpha: int, k: int) -> np.ndarray:
        if abs(k) > self.k_max:
            return np.zeros(4, dtype=complex)
        return self.fourier[alpha - 1, k + self.k_max]

    def components_in_zone(self, alpha: int, gamma_reference: float) -> np.ndarray:
        """
        Fourier components of mode alpha expressed in the Floquet zone of an unfolded quasienergy.

        Folding shifts gamma by m*omega and the mode by exp(i m omega t); this undoes the shift so
        that component k refers to the same harmonic as in a perturbative expansion around gamma_reference.

        Args:
            alpha (int): State label 1..4.
            gamma_reference (float): Unfolded quasienergy the components should be aligned to.
        Returns:
            np.ndarray: Components indexed like `harmonics`, shape (2 K_max + 1, 4).
        """
        shift = int(np.rint((self.gammas[alpha - 1] - gamma_reference) / self.omega))
        aligned = np.zeros_like(self.fourier[alpha - 1])
        size = len(self.harmonics)
        for index in range(size):
            source = index + shift
            if 0 <= source < size:
                aligned[index] = self.fourier[alpha - 1, source]
        return aligned


@dataclass(frozen=True)
class TransitionTable:
    """
    Time-averaged overlap matrix S (rows: Floquet states, columns: basis states) and
    the averaged transition probabilities Pbar = S^T S.
    """
    s: np.ndarray
    pbar: np.ndarray
    resonant: bool = False
    route_difference: float = 0.0

    def probability(self, a: int, b: int) -> float:
        """Averaged probability for the transition a -> b, labels 1..4."""
        return float(self.pbar[a - 1, b - 1])

    def to_dict(self) -> dict:
        return {
            "s": self.s.tolist(),
            "pbar": self.pbar.tolist(),
            "resonant": self.resonant,
            "route_difference": self.route_difference,
        }
