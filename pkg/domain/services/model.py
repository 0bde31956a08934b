"""
Two-qubit Hamiltonian and its stationary bases.

Basis order: index 1 carries sigma_z = +1 on both qubits (|down down>), followed by
|down up>, |up down>, |up up>; qubit 1 is the left tensor factor.
"""
from __future__ import annotations

from typing import Tuple

import numpy as np

from domain.entities.system import Drive, SystemParams
from helpers.exceptions.model_exceptions import ZeroBiasException

IDENTITY = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def on_qubit(operator: np.ndarray, qubit: int) -> np.ndarray:
    """Extend a single-qubit operator to the pair, acting as identity on the other qubit."""
    return np.kron(operator, IDENTITY) if qubit == 1 else np.kron(IDENTITY, operator)


def hamiltonian_parts(p: SystemParams) -> Tuple[np.ndarray, np.ndarray]:
    """
    Split H(t) = H_static + v(t) H_drive.
    Args:
        p (SystemParams): System parameters.
    Returns:
        Tuple[np.ndarray, np.ndarray]: Static part and the operator multiplying v(t).
    """
    z1, z2 = on_qubit(SIGMA_Z, 1), on_qubit(SIGMA_Z, 2)
    x1, x2 = on_qubit(SIGMA_X, 1), on_qubit(SIGMA_X, 2)
    static = (
        -0.5 * (p.eps1 * z1 + p.delta1 * x1)
        - 0.5 * (p.eps2 * z2 + p.delta2 * x2)
        - 0.5 * p.g * (z1 @ z2)
    )
    drive = -0.5 * (z1 + z2)
    return static, drive


def hamiltonian_at(p: SystemParams, d: Drive, t: float) -> np.ndarray:
    static, drive = hamiltonian_parts(p)
    return static + d.field(t) * drive


def hamiltonian_function(p: SystemParams, d: Drive):
    """Closure t -> H(t) with the constant parts assembled once."""
    static, drive = hamiltonian_parts(p)

    def h(t: float) -> np.ndarray:
        return static + d.field(t) * drive

    return h


def single_qubit_eigenbasis(eps: float, delta: float) -> Tuple[np.ndarray, np.ndarray, float]:
    """
    Exact eigenbasis of -(eps sigma_z + delta sigma_x)/2.

    Args:
        eps (float): Energy bias.
        delta (float): Tunnel splitting.
    Returns:
        Tuple[np.ndarray, np.ndarray, float]: Lower-energy state |down>, upper state |up>, and the gap.
    """
    if eps == 0 and delta == 0:
        raise ZeroBiasException("Single-qubit eigenbasis undefined for eps = delta = 0")
    theta = np.arctan2(delta, eps)
    down = np.array([np.cos(theta / 2), np.sin(theta / 2)], dtype=complex)
    up = np.array([-np.sin(theta / 2), np.cos(theta / 2)], dtype=complex)
    return down, up, float(np.hypot(eps, delta))


def _index_eigenvectors(eps: float, delta: float) -> Tuple[np.ndarray, np.ndarray]:
    # Eigenvectors continuously connected to (1, 0) and (0, 1) for either sign of eps.
    theta = np.arctan(delta / eps) if eps != 0 else np.pi / 2
    plus = np.array([np.cos(theta / 2), np.sin(theta / 2)], dtype=complex)
    minus = np.array([-np.sin(theta / 2), np.cos(theta / 2)], dtype=complex)
    return plus, minus


def stationary_basis(p: SystemParams) -> np.ndarray:
    """
    Exact eigenstates of the static uncoupled Hamiltonian as rows, in basis index order.
    Returns:
        np.ndarray: Shape (4, 4); row x is state |x>.
    """
    plus1, minus1 = _index_eigenvectors(p.eps1, p.delta1)
    plus2, minus2 = _index_eigenvectors(p.eps2, p.delta2)
    return np.array([
        np.kron(plus1, plus2),
        np.kron(plus1, minus2),
        np.kron(minus1, plus2),
        np.kron(minus1, minus2),
    ])


def computational_basis() -> np.ndarray:
    return np.eye(4, dtype=complex)


def _require_bias(p: SystemParams) -> None:
    for qubit in (1, 2):
        if p.eps(qubit) == 0:
            raise ZeroBiasException(f"eps{qubit} must be nonzero for the perturbative eigensystem")


def uncoupled_energies(p: SystemParams) -> np.ndarray:
    """Second-order energies E_1..E_4 of the uncoupled qubits; E_1 + E_4 = E_2 + E_3 = 0."""
    _require_bias(p)
    shift1 = p.delta1 ** 2 / (4 * p.eps1)
    shift2 = p.delta2 ** 2 / (4 * p.eps2)
    e1 = -(p.eps1 + p.eps2) / 2 - shift1 - shift2
    e2 = -(p.eps1 - p.eps2) / 2 - shift1 + shift2
    return np.array([e1, e2, -e2, -e1])


def uncoupled_eigensystem(p: SystemParams) -> Tuple[np.ndarray, np.ndarray]:
    """
    Second-order perturbative eigenstates and energies of the uncoupled qubits.
    Args:
        p (SystemParams): System parameters with nonzero biases.
    Returns:
        Tuple[np.ndarray, np.ndarray]: States as rows (4, 4) and energies (4,).
    Raises:
        ZeroBiasException: If eps1 or eps2 is zero.
    """
    _require_bias(p)
    r1 = p.delta1 / (2 * p.eps1)
    r2 = p.delta2 / (2 * p.eps2)
    both = p.delta1 * p.delta2 / (4 * p.eps1 * p.eps2)
    c = 1 - p.delta1 ** 2 / (8 * p.eps1 ** 2) - p.delta2 ** 2 / (8 * p.eps2 ** 2)
    states = np.array([
        [c, r2, r1, both],
        [-r2, c, -both, r1],
        [-r1, -both, c, r2],
        [both, -r1, -r2, c],
    ], dtype=complex)
    return states, uncoupled_energies(p)


def weak_coupling_validity(p: SystemParams, ratio: float) -> bool:
    """
    True when the coupling and both splittings are small against the biases.
    Args:
        p (SystemParams): System parameters.
        ratio (float): Largest accepted |g| / |eps_q| and delta_q / |eps_q|.
    """
    for qubit in (1, 2):
        bias = abs(p.eps(qubit))
        if bias == 0:
            return False
        if abs(p.g) > ratio * bias or p.delta(qubit) > ratio * bias:
            return False
    return True
