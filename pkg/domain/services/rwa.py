"""
Resonant closed forms: photon numbers, effective Rabi frequencies and Lorentzian line shapes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from domain.entities.resonance import PeakMeasurement, ResonantChannel
from domain.entities.system import Drive, SystemParams
from domain.services.numerics import bessel_j
from helpers.enums.channel_kind import ChannelKind
from helpers.exceptions.perturbation_exceptions import PoleProximityException
from helpers.exceptions.rwa_exceptions import UnknownChannelException

POLE_LIMIT = 1e-9


def detuning(value: float, omega: float) -> Tuple[int, float]:
    """
    Photon number K and detuning value + K omega, with the detuning folded into [-omega/2, omega/2).
    """
    if omega <= 0:
        raise ValueError("omega must be positive")
    k = -math.floor(value / omega + 0.5)
    return k, value + k * omega


def nearest_photon_number(value: float, omega: float) -> int:
    """K minimizing |value + K omega|; ties go to the smaller |K|."""
    ratio = -value / omega
    low, high = math.floor(ratio), math.ceil(ratio)
    d_low, d_high = abs(value + low * omega), abs(value + high * omega)
    if d_low < d_high:
        return low
    if d_high < d_low:
        return high
    return low if abs(low) <= abs(high) else high


def _two_level_terms(kind: ChannelKind, p: SystemParams) -> Tuple[float, float]:
    if kind == ChannelKind.ONE_TO_TWO:
        return p.eps2 + p.g, p.delta2
    if kind == ChannelKind.ONE_TO_THREE:
        return p.eps1 + p.g, p.delta1
    raise UnknownChannelException(f"{kind.value} is not a two-level channel")


def rabi_two_level(kind: ChannelKind, p: SystemParams, d: Drive, k: Optional[int] = None) -> float:
    """
    Effective Rabi frequency (Delta_q / 2) J_K(A / omega) of the 1->2 or 1->3 channel.
    Args:
        kind (ChannelKind): ONE_TO_TWO (via qubit 2) or ONE_TO_THREE (via qubit 1).
        p (SystemParams): System parameters.
        d (Drive): Drive.
        k (Optional[int]): Photon index; the nearest one by default.
    Returns:
        float: Omega_0, signed.
    """
    value, delta = _two_level_terms(kind, p)
    if k is None:
        k, _ = detuning(value, d.omega)
    return 0.5 * delta * bessel_j(k, d.bessel_argument)


def rabi_inverse_channel(p: SystemParams, d: Drive, k12: int, k_max: int) -> Tuple[float, float]:
    """
    Effective Rabi frequency and line shift of the two-photon-like 1->4 channel.

    Args:
        p (SystemParams): System parameters.
        d (Drive): Drive.
        k12 (int): Photon index of eps1 + eps2 + K omega ~ 0.
        k_max (int): Harmonic cutoff of the sums.
    Returns:
        Tuple[float, float]: (Omega_0, delta_0).
    Raises:
        PoleProximityException: If (eps_q + k omega)^2 - g^2 vanishes for some |k| <= k_max.
    """
    ks = np.arange(-k_max, k_max + 1)
    bessel = bessel_j(ks, d.bessel_argument)
    shifted = bessel_j(k12 - ks, d.bessel_argument)
    numerators = []
    poles = []
    for qubit in (1, 2):
        biased = p.eps(qubit) + ks * d.omega
        pole = biased ** 2 - p.g ** 2
        hits = np.nonzero(np.abs(pole) < POLE_LIMIT)[0]
        if hits.size:
            raise PoleProximityException(qubit=qubit, k=int(ks[hits[0]]))
        numerators.append(biased)
        poles.append(pole)

    delta0 = -0.5 * np.sum(bessel ** 2 * (
        p.delta1 ** 2 * numerators[0] / poles[0] + p.delta2 ** 2 * numerators[1] / poles[1]
    ))
    omega0 = 0.25 * p.g * p.delta1 * p.delta2 * np.sum(bessel * shifted * (1 / poles[0] + 1 / poles[1]))
    return float(omega0), float(delta0)


def channel(kind: ChannelKind, p: SystemParams, d: Drive, k_max: int) -> ResonantChannel:
    """
    Resonant channel out of state 1 at its nearest photon number.
    """
    if kind == ChannelKind.ONE_TO_FOUR:
        value = p.eps1 + p.eps2
        k = nearest_photon_number(value, d.omega)
        omega0, delta0 = rabi_inverse_channel(p, d, k, k_max)
        return ResonantChannel(kind, k, value + k * d.omega, omega0, delta0)
    value, _ = _two_level_terms(kind, p)
    k, delta = detuning(value, d.omega)
    return ResonantChannel(kind, k, delta, rabi_two_level(kind, p, d, k))


def nearest_channels(p: SystemParams, d: Drive, k_max: int) -> Tuple[ResonantChannel, ResonantChannel, ResonantChannel]:
    return tuple(channel(kind, p, d, k_max) for kind in ChannelKind)


@dataclass(frozen=True)
class LorentzianProfile:
    """
    Pulse- and phase-averaged probability 1/2 [1 + ((delta - delta0) / (2 Omega_0))^2]^-1.

    A vanishing Omega_0 gives the identically zero profile, marked by `is_zero`.
    """
    omega0: float
    delta0: float = 0.0

    @property
    def is_zero(self) -> bool:
        return self.omega0 == 0

    @property
    def hwhm(self) -> float:
        return 2.0 * abs(self.omega0)

    def __call__(self, delta):
        if self.is_zero:
            return np.zeros_like(np.asarray(delta, dtype=float)) if np.ndim(delta) else 0.0
        scaled = (np.asarray(delta, dtype=float) - self.delta0) / (2.0 * self.omega0)
        result = 0.5 / (1.0 + scaled ** 2)
        return float(result) if np.ndim(result) == 0 else result


def lorentzian_profile(resonant: ResonantChannel) -> LorentzianProfile:
    return LorentzianProfile(omega0=resonant.omega0, delta0=resonant.delta0)


def profile_value(resonant: ResonantChannel) -> float:
    """Lorentzian value at the channel's own detuning."""
    return lorentzian_profile(resonant)(resonant.delta)


def _crossing(xs: np.ndarray, ys: np.ndarray, peak: int, half: float, step: int) -> float:
    j = peak
    while 0 <= j + step < len(xs):
        if ys[j + step] < half:
            x0, x1, y0, y1 = xs[j], xs[j + step], ys[j], ys[j + step]
            return float(x0 + (half - y0) * (x1 - x0) / (y1 - y0))
        j += step
    return float("nan")


def measure_peak(
    profile: Callable[[float], float],
    center: float,
    hwhm: float,
    n_points: int = 41,
    span: float = 5.0,
) -> PeakMeasurement:
    """
    Scan a line shape around an estimated peak and measure its centre, height and half width.

    The maximum is refined by a parabola through the three highest samples; half-maximum
    crossings come from linear interpolation between samples.

    Args:
        profile (Callable[[float], float]): Line shape, analytic or numerical.
        center (float): Estimated peak position.
        hwhm (float): Estimated half width; sets the scan window.
        n_points (int): Number of scan points.
        span (float): Half window in units of `hwhm`.
    Returns:
        PeakMeasurement: Widths are NaN when a crossing falls outside the window.
    """
    if hwhm <= 0:
        raise ValueError("hwhm estimate must be positive")
    xs = center + np.linspace(-span * hwhm, span * hwhm, n_points)
    ys = np.array([profile(float(x)) for x in xs])
    peak = int(np.argmax(ys))
    top_x, top_y = float(xs[peak]), float(ys[peak])
    if 0 < peak < n_points - 1:
        y0, y1, y2 = ys[peak - 1], ys[peak], ys[peak + 1]
        curvature = y0 - 2 * y1 + y2
        if curvature < 0:
            shift = 0.5 * (y0 - y2) / curvature
            top_x = float(xs[peak] + shift * (xs[1] - xs[0]))
            top_y = float(y1 - 0.25 * (y0 - y2) * shift)

    half = top_y / 2
    left = _crossing(xs, ys, peak, half, -1)
    right = _crossing(xs, ys, peak, half, 1)
    width = (right - left) / 2 if np.isfinite(left) and np.isfinite(right) else float("nan")
    return PeakMeasurement(center=top_x, height=top_y, hwhm=width, left=left, right=right)
