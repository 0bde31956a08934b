"""
Two-qubit concurrence.
"""
from __future__ import annotations

import numpy as np

from domain.services.model import SIGMA_Y

SPIN_FLIP = np.kron(SIGMA_Y, SIGMA_Y)


def concurrence(rho: np.ndarray):
    """
    Wootters concurrence max{0, l1 - l2 - l3 - l4}, with l_i the decreasing square roots of
    the eigenvalues of rho rho~ and rho~ = (sigma_y x sigma_y) rho* (sigma_y x sigma_y).

    Args:
        rho (np.ndarray): A density matrix (4, 4) or a stack of them (n, 4, 4).
    Returns:
        float or np.ndarray: Concurrence in [0, 1], one value per matrix.
    """
    rho = np.asarray(rho, dtype=complex)
    flipped = SPIN_FLIP @ rho.conj() @ SPIN_FLIP
    eigenvalues = np.linalg.eigvals(rho @ flipped).real
    roots = -np.sort(-np.sqrt(np.clip(eigenvalues, 0.0, None)), axis=-1)
    values = np.maximum(0.0, roots[..., 0] - np.sum(roots[..., 1:], axis=-1))
    return float(values) if values.ndim == 0 else values


def averaged_concurrence(rhos: np.ndarray) -> float:
    """Mean concurrence over a sampled period."""
    return float(np.mean(concurrence(rhos)))
