"""
Second-order Floquet perturbation theory in the tunnel splittings.

All series run over harmonics |k| <= K_max; Bessel factors take the argument A/omega.
"""
from __future__ import annotations

from typing import Optional, Tuple

import numpy as np

from domain.entities.floquet import TransitionTable
from domain.entities.perturbation import ChiTable
from domain.entities.resonance import ResonanceCatalog, ResonanceLine
from domain.entities.sweep import SweepAxis
from domain.entities.system import Drive, SystemParams
from domain.services.floquet import fold
from domain.services.numerics import bessel_j
from helpers.enums.resonance_kind import ResonanceKind
from helpers.enums.sweep_parameter import SweepParameter
from helpers.exceptions.model_exceptions import InvalidParametersException, ZeroBiasException
from helpers.exceptions.perturbation_exceptions import ResonantDenominatorException

SIGNS = (1, -1)
CONGRUENCE_SLACK = 1e-12


class _Bessel:
    """J_n(A/omega) lookup for |n| <= reach."""

    def __init__(self, argument: float, reach: int):
        self.reach = reach
        self.values = bessel_j(np.arange(-reach, reach + 1), argument)

    def __call__(self, orders) -> np.ndarray:
        orders = np.asarray(orders)
        inside = np.abs(orders) <= self.reach
        clipped = np.clip(orders, -self.reach, self.reach) + self.reach
        return np.where(inside, self.values[clipped], 0.0)


def _guard(
    denominators: np.ndarray, harmonics: np.ndarray, limit: float, qubit: int, sign: int, label: Optional[str] = None
) -> None:
    hits = np.nonzero(np.abs(denominators) < limit)[0]
    if hits.size:
        k = int(harmonics[hits[0]])
        message = f"Resonant denominator {label} + k*omega near zero at k={k}" if label else None
        raise ResonantDenominatorException(message, qubit=qubit, sign=sign, k=k)


def _require_bias(p: SystemParams) -> None:
    if p.eps1 == 0 or p.eps2 == 0:
        raise ZeroBiasException("Perturbative expressions need nonzero eps1 and eps2")


def chi_table(p: SystemParams, d: Drive, k_max: int, guard_band: float) -> ChiTable:
    """
    lambda_{qk}^{+-} = J_{+-k}(A/omega) / (2 (+-eps_q + g + k omega)) and
    chi_{qk}^{+-} = +-sum_n J_{+-(n+k)}(A/omega) lambda_{qn}^{+-}.

    Args:
        p (SystemParams): System parameters.
        d (Drive): Drive.
        k_max (int): Harmonic cutoff.
        guard_band (float): Denominators below guard_band * omega are treated as resonant.
    Returns:
        ChiTable: Both tables and the truncation tail estimate |J_{K_max}| max|lambda|.
    Raises:
        ResonantDenominatorException: Naming the first (qubit, sign, k) inside the guard band.
    """
    harmonics = np.arange(-k_max, k_max + 1)
    bessel = _Bessel(d.bessel_argument, 2 * k_max + 1)
    lambdas = np.zeros((2, 2, harmonics.size))
    chis = np.zeros_like(lambdas)
    pair_orders = harmonics[:, np.newaxis] + harmonics[np.newaxis, :]

    for qubit in (1, 2):
        for s_index, sign in enumerate(SIGNS):
            denominators = sign * p.eps(qubit) + p.g + harmonics * d.omega
            _guard(denominators, harmonics, guard_band * d.omega, qubit, sign)
            lam = bessel(sign * harmonics) / (2 * denominators)
            lambdas[qubit - 1, s_index] = lam
            # rows k, columns n
            chis[qubit - 1, s_index] = sign * (bessel(sign * pair_orders) @ lam)

    tail = float(abs(bessel(k_max)) * np.max(np.abs(lambdas)))
    return ChiTable(lambdas=lambdas, chis=chis, k_max=k_max, omega=d.omega, tail_estimate=tail)


def chi_identity_residual(table: ChiTable, qubit: int, sign: int, m: int, use_chi: bool = False) -> float:
    """
    Residual of sum_n x_n x_{n-m} = +-(chi_m - chi_{-m}) / (2 m omega) for x = lambda or chi.
    """
    if m == 0:
        raise ValueError("Identity holds for m != 0")
    series = table.chi_series(qubit, sign) if use_chi else table.lambda_series(qubit, sign)
    shifted = np.zeros_like(series)
    if m > 0:
        shifted[m:] = series[:-m]
    else:
        shifted[:m] = series[-m:]
    left = float(np.sum(series * shifted))
    right = sign * (table.chi(qubit, m, sign) - table.chi(qubit, -m, sign)) / (2 * m * table.omega)
    return abs(left - right)


def zeroth_order_quasienergies(p: SystemParams) -> np.ndarray:
    return np.array([
        -(p.eps1 + p.eps2 + p.g) / 2,
        -(p.eps1 - p.eps2 - p.g) / 2,
        (p.eps1 - p.eps2 + p.g) / 2,
        (p.eps1 + p.eps2 - p.g) / 2,
    ])


def quasienergy_2nd(p: SystemParams, d: Drive, table: ChiTable, folded: bool = True) -> np.ndarray:
    """
    Quasienergies to second order in the tunnel splittings.
    Args:
        p (SystemParams): System parameters.
        d (Drive): Drive.
        table (ChiTable): Bessel sums for the same parameters.
        folded (bool): Fold into [-omega/2, omega/2); the raw values serve zone alignment.
    Returns:
        np.ndarray: gamma_1..gamma_4.
    """
    d1, d2 = p.delta1 ** 2, p.delta2 ** 2
    c1p, c1m = table.chi(1, 0, 1), table.chi(1, 0, -1)
    c2p, c2m = table.chi(2, 0, 1), table.chi(2, 0, -1)
    gammas = zeroth_order_quasienergies(p) + np.array([
        -0.5 * (d1 * c1p + d2 * c2p),
        -0.5 * (d1 * c1m - d2 * c2p),
        0.5 * (d1 * c1p - d2 * c2m),
        0.5 * (d1 * c1m + d2 * c2m),
    ])
    return fold(gammas, d.omega) if folded else gammas


def analytic_fourier_components(
    p: SystemParams, d: Drive, table: ChiTable, guard_band: float
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Perturbative Fourier components u_{alpha k} of the four Floquet modes.

    Args:
        p (SystemParams): System parameters.
        d (Drive): Drive.
        table (ChiTable): Bessel sums for the same parameters.
        guard_band (float): Guard band for the eps1 +- eps2 + k omega denominators.
    Returns:
        Tuple[np.ndarray, np.ndarray]: Harmonics and components of shape (4, 2 K_max + 1, 4).
    """
    k_max = table.k_max
    ks = table.harmonics
    w = d.omega
    bessel = _Bessel(d.bessel_argument, 2 * k_max + 1)
    D1, D2 = p.delta1, p.delta2
    l1p, l1m = table.lambda_series(1, 1), table.lambda_series(1, -1)
    l2p, l2m = table.lambda_series(2, 1), table.lambda_series(2, -1)
    c1p, c1m = table.chi_series(1, 1), table.chi_series(1, -1)
    c2p, c2m = table.chi_series(2, 1), table.chi_series(2, -1)

    def chi_at(series: np.ndarray, orders: np.ndarray) -> np.ndarray:
        inside = np.abs(orders) <= k_max
        return np.where(inside, series[np.clip(orders, -k_max, k_max) + k_max], 0.0)

    sum_denominator = p.eps1 + p.eps2 + ks * w
    _guard(sum_denominator, ks, guard_band * w, 0, 1, "eps1 + eps2")
    nonzero = ks != 0
    m = ks[nonzero]
    # k rows, m columns
    j_k_minus_m = bessel(ks[:, np.newaxis] - m[np.newaxis, :])
    j_m_minus_k = bessel(m[np.newaxis, :] - ks[:, np.newaxis])

    u = np.zeros((4, ks.size, 4))

    # state 1
    norm_plus = 1 - 0.5 * np.sum(D1 ** 2 * l1p ** 2 + D2 ** 2 * l2p ** 2)
    weights_plus = (D1 ** 2 * chi_at(c1p, -m) + D2 ** 2 * chi_at(c2p, -m)) / (m * w)
    u[0, :, 0] = bessel(ks) * norm_plus + 0.5 * (j_k_minus_m @ weights_plus)
    u[0, :, 1] = D2 * l2p
    u[0, :, 2] = D1 * l1p
    # inner_plus[m] = sum_n (lambda_1n + lambda_2n) J_{m-n}
    inner_plus = bessel(ks[:, np.newaxis] - ks[np.newaxis, :]) @ (l1p + l2p)
    u[0, :, 3] = 0.5 * D1 * D2 * (
        bessel(ks[np.newaxis, :] - ks[:, np.newaxis]) @ (inner_plus / sum_denominator)
    )

    # state 2
    diff_12 = p.eps1 - p.eps2 + ks * w
    _guard(diff_12, ks, guard_band * w, 0, 1, "eps1 - eps2")
    u[1, :, 0] = -D2 * c2p
    u[1, :, 1] = np.where(
        nonzero,
        (D1 ** 2 * c1m - D2 ** 2 * c2p) / (2 * np.where(nonzero, ks, 1) * w),
        -0.5 * np.sum(D1 ** 2 * l1m ** 2 + D2 ** 2 * l2p ** 2),
    ) + (ks == 0)
    u[1, :, 2] = 0.5 * D1 * D2 * (c1m - c2p) / diff_12
    u[1, :, 3] = D1 * c1m

    # state 3
    diff_21 = p.eps2 - p.eps1 + ks * w
    _guard(diff_21, ks, guard_band * w, 0, -1, "eps2 - eps1")
    u[2, :, 0] = -D1 * c1p
    u[2, :, 1] = 0.5 * D1 * D2 * (c2m - c1p) / diff_21
    u[2, :, 2] = np.where(
        nonzero,
        (D2 ** 2 * c2m - D1 ** 2 * c1p) / (2 * np.where(nonzero, ks, 1) * w),
        -0.5 * np.sum(D1 ** 2 * l1p ** 2 + D2 ** 2 * l2m ** 2),
    ) + (ks == 0)
    u[2, :, 3] = D2 * c2m

    # state 4
    # inner_minus[m] = sum_n (lambda_1n^- + lambda_2n^-) J_{n+m}
    inner_minus = bessel(ks[:, np.newaxis] + ks[np.newaxis, :]) @ (l1m + l2m)
    u[3, :, 0] = -0.5 * D1 * D2 * (
        bessel(ks[:, np.newaxis] + ks[np.newaxis, :]) @ (inner_minus / sum_denominator)
    )
    u[3, :, 1] = D1 * l1m
    u[3, :, 2] = D2 * l2m
    norm_minus = 1 - 0.5 * np.sum(D1 ** 2 * l1m ** 2 + D2 ** 2 * l2m ** 2)
    weights_minus = (D1 ** 2 * chi_at(c1m, -m) + D2 ** 2 * chi_at(c2m, -m)) / (m * w)
    u[3, :, 3] = bessel(-ks) * norm_minus - 0.5 * (j_m_minus_k @ weights_minus)

    return ks, u


def _bracket(p: SystemParams, d: Drive, bessel: _Bessel, ks: np.ndarray, coupling: float, guard: float) -> np.ndarray:
    """B_k = sum_n J_n J_{k-n} (1 - (eps1 (eps1 + k w)/(eps1 + c + n w) + eps2 (eps2 + k w)/(eps2 + c + n w)) / (eps1 + eps2 + k w))."""
    w = d.omega
    e1, e2 = p.eps1, p.eps2
    total = e1 + e2 + ks * w
    _guard(total, ks, guard, 0, 1, "eps1 + eps2")
    label = "+ g" if coupling == p.g else "- g"
    den1 = e1 + coupling + ks * w
    den2 = e2 + coupling + ks * w
    _guard(den1, ks, guard, 1, 1, f"eps1 {label}")
    _guard(den2, ks, guard, 2, 1, f"eps2 {label}")
    # k rows, n columns
    inner = 1 - (
        e1 * (e1 + ks[:, np.newaxis] * w) / den1[np.newaxis, :]
        + e2 * (e2 + ks[:, np.newaxis] * w) / den2[np.newaxis, :]
    ) / total[:, np.newaxis]
    weights = bessel(ks)[np.newaxis, :] * bessel(ks[:, np.newaxis] - ks[np.newaxis, :])
    return np.sum(weights * inner, axis=1)


def _flip_series(p: SystemParams, d: Drive, bessel: _Bessel, ks: np.ndarray, qubit: int, sign: int, guard: float) -> np.ndarray:
    """[J_k (g + k w) / (+-eps_q + g + k w)]^2 for every k."""
    denominators = sign * p.eps(qubit) + p.g + ks * d.omega
    _guard(denominators, ks, guard, qubit, sign)
    return (bessel(ks) * (p.g + ks * d.omega) / denominators) ** 2


def analytic_s_elements(p: SystemParams, d: Drive, table: ChiTable, guard_band: float) -> TransitionTable:
    """
    Leading-order S-matrix. Diagonal entries close each row to one; S_23 = S_32 = 0.
    Args:
        p (SystemParams): System parameters with nonzero biases.
        d (Drive): Drive.
        table (ChiTable): Bessel sums; fixes the harmonic cutoff.
        guard_band (float): Denominator guard band relative to omega.
    Returns:
        TransitionTable: S and Pbar = S^T S.
    """
    _require_bias(p)
    ks = table.harmonics
    bessel = _Bessel(d.bessel_argument, 2 * table.k_max + 1)
    guard = guard_band * d.omega
    e1, e2 = p.eps1, p.eps2
    pre1 = p.delta1 ** 2 / (4 * e1 ** 2)
    pre2 = p.delta2 ** 2 / (4 * e2 ** 2)
    pre12 = p.delta1 ** 2 * p.delta2 ** 2 / (16 * e1 ** 2 * e2 ** 2)

    s = np.zeros((4, 4))
    s[0, 1] = s[1, 0] = pre2 * np.sum(_flip_series(p, d, bessel, ks, 2, 1, guard))
    s[0, 2] = s[2, 0] = pre1 * np.sum(_flip_series(p, d, bessel, ks, 1, 1, guard))
    s[1, 3] = s[3, 1] = pre1 * np.sum(_flip_series(p, d, bessel, ks, 1, -1, guard))
    s[2, 3] = s[3, 2] = pre2 * np.sum(_flip_series(p, d, bessel, ks, 2, -1, guard))
    s[0, 3] = pre12 * np.sum(_bracket(p, d, bessel, ks, p.g, guard) ** 2)
    s[3, 0] = pre12 * np.sum(_bracket(p, d, bessel, ks, -p.g, guard) ** 2)
    for row in range(4):
        s[row, row] = 1 - (np.sum(s[row]) - s[row, row])
    return TransitionTable(s=s, pbar=s.T @ s)


def nonresonant_probabilities(p: SystemParams, d: Drive, table: ChiTable, guard_band: float) -> Tuple[float, float, float]:
    """
    Averaged probabilities out of state 1 away from every resonance.
    Returns:
        Tuple[float, float, float]: Pbar for 1->2, 1->3 and 1->4.
    """
    _require_bias(p)
    ks = table.harmonics
    bessel = _Bessel(d.bessel_argument, 2 * table.k_max + 1)
    guard = guard_band * d.omega
    e1, e2 = p.eps1, p.eps2
    up2 = _flip_series(p, d, bessel, ks, 2, 1, guard)
    up1 = _flip_series(p, d, bessel, ks, 1, 1, guard)
    down1 = _flip_series(p, d, bessel, ks, 1, -1, guard)
    down2 = _flip_series(p, d, bessel, ks, 2, -1, guard)

    p12 = p.delta2 ** 2 / (2 * e2 ** 2) * np.sum(up2)
    p13 = p.delta1 ** 2 / (2 * e1 ** 2) * np.sum(up1)
    brackets = (
        up2 * np.sum(down1)
        + up1 * np.sum(down2)
        + _bracket(p, d, bessel, ks, p.g, guard) ** 2
        + _bracket(p, d, bessel, ks, -p.g, guard) ** 2
    )
    p14 = p.delta1 ** 2 * p.delta2 ** 2 / (16 * e1 ** 2 * e2 ** 2) * np.sum(brackets)
    return float(p12), float(p13), float(p14)


def _axis_derivatives(axis: SweepAxis, ratio: Optional[float]) -> Tuple[float, float, float]:
    if axis.parameter == SweepParameter.EPS1:
        return 1.0, (ratio if ratio is not None else 0.0), 0.0
    if axis.parameter == SweepParameter.EPS2:
        return 0.0, 1.0, 0.0
    if axis.parameter == SweepParameter.G:
        return 0.0, 0.0, 1.0
    return 0.0, 0.0, 0.0


def resonance_catalog(
    template: SystemParams,
    d: Drive,
    axes: Tuple[SweepAxis, ...],
    ratio: Optional[float] = None,
) -> ResonanceCatalog:
    """
    Every integer solution of the multiphoton resonance conditions inside a sweep window.

    Each condition is affine in the swept values, c = beta + sum_i alpha_i x_i = n omega.

    Args:
        template (SystemParams): Base parameters; swept entries are ignored.
        d (Drive): Drive.
        axes (Tuple[SweepAxis, ...]): One or two swept axes.
        ratio (Optional[float]): eps2 = ratio * eps1 link.
    Returns:
        ResonanceCatalog: Lines (or points for a single axis) labelled by condition and photon number.
    """
    if not 1 <= len(axes) <= 2:
        raise InvalidParametersException("Resonance catalog needs one or two axes")
    swept = {axis.parameter for axis in axes}
    base = {"eps1": template.eps1, "eps2": template.eps2, "g": template.g}
    for name in ("eps1", "eps2", "g"):
        if SweepParameter(name) in swept:
            base[name] = 0.0
    if ratio is not None:
        base["eps2"] = ratio * base["eps1"]

    derivatives = [_axis_derivatives(axis, ratio) for axis in axes]
    lows = [min(axis.minimum, axis.maximum) for axis in axes]
    highs = [max(axis.minimum, axis.maximum) for axis in axes]
    omega = d.omega
    lines = []
    for kind in ResonanceKind:
        weights = np.array(kind.coefficients)
        beta = float(weights @ np.array([base["eps1"], base["eps2"], base["g"]]))
        alphas = [float(weights @ np.array(derivative)) for derivative in derivatives]
        if all(alpha == 0 for alpha in alphas):
            continue
        corners = [beta]
        for alpha, low, high in zip(alphas, lows, highs):
            corners = [c + alpha * low for c in corners] + [c + alpha * high for c in corners]
        n_low = int(np.ceil(min(corners) / omega - CONGRUENCE_SLACK))
        n_high = int(np.floor(max(corners) / omega + CONGRUENCE_SLACK))
        for n in range(n_low, n_high + 1):
            lines.append(_line(kind, n, n * omega - beta, alphas))
    return ResonanceCatalog(axes=tuple(axes), lines=lines)


def _line(kind: ResonanceKind, n: int, target: float, alphas) -> ResonanceLine:
    nan = float("nan")
    if len(alphas) == 1:
        return ResonanceLine(kind, n, "point", target / alphas[0], nan, nan)
    ax, ay = alphas
    if ay == 0:
        return ResonanceLine(kind, n, "vertical", target / ax, nan, float("inf"))
    if ax == 0:
        return ResonanceLine(kind, n, "horizontal", nan, target / ay, 0.0)
    return ResonanceLine(kind, n, "diagonal", target / ax, target / ay, -ax / ay)


def coupling_from_peak(location: float, kind: ResonanceKind, omega: float, ratio: Optional[float] = None) -> float:
    """
    Signed coupling recovered from the position of a resonance peak on an eps1 sweep.

    The eps1 + g line sits at eps1 = n omega - g, and the eps2 + g line at eps1 = (n omega - g) / s
    when eps2 = s eps1. Couplings are assumed smaller than omega / 2.

    Args:
        location (float): Observed peak position in eps1.
        kind (ResonanceKind): Condition the peak belongs to (one of the +-g kinds).
        omega (float): Drive frequency.
        ratio (Optional[float]): eps2 / eps1 link, required for the eps2 kinds.
    Returns:
        float: The coupling g in [-omega/2, omega/2).
    """
    scale = 1.0
    if kind in (ResonanceKind.EPS2_PLUS_G, ResonanceKind.EPS2_MINUS_G):
        if ratio is None:
            raise InvalidParametersException("eps2 resonances need the eps2/eps1 ratio")
        scale = ratio
    elif kind not in (ResonanceKind.EPS1_PLUS_G, ResonanceKind.EPS1_MINUS_G):
        raise InvalidParametersException(f"{kind.value} resonances do not depend on the coupling")
    bias = scale * location
    sign = -1.0 if kind in (ResonanceKind.EPS1_PLUS_G, ResonanceKind.EPS2_PLUS_G) else 1.0
    return float(fold(sign * bias, omega))
