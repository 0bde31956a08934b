from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from helpers.enums.channel_kind import ChannelKind
from helpers.enums.resonance_kind import ResonanceKind


@dataclass(frozen=True)
class ResonanceLine:
    """
    One solution of a multiphoton resonance condition inside a sweep window.

    For one swept axis the line degenerates to a point and `orientation` is "point";
    in a map it is "vertical", "horizontal" or "diagonal" with slope dy/dx.
    """
    kind: ResonanceKind
    n: int
    orientation: str
    x_intercept: float
    y_intercept: float
    slope: float

    @property
    def location(self) -> float:
        """Position along the first axis (exact for points and vertical lines)."""
        return self.x_intercept

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "n": self.n,
            "orientation": self.orientation,
            "x_intercept": self.x_intercept,
            "y_intercept": self.y_intercept,
            "slope": self.slope,
        }


@dataclass(frozen=True)
class ResonanceCatalog:
    axes: tuple
    lines: List[ResonanceLine] = field(default_factory=list)

    def of_kind(self, kind: ResonanceKind) -> List[ResonanceLine]:
        return [line for line in self.lines if line.kind == kind]

    def locations(self, kind: ResonanceKind) -> List[float]:
        return sorted(line.location for line in self.of_kind(kind))


@dataclass(frozen=True)
class ResonantChannel:
    """
    A resonant channel out of state 1 at its nearest photon number.

    Attributes:
        kind: Target of the transition.
        k: Photon index K of the channel.
        delta: Detuning, the defining combination plus k*omega.
        omega0: Effective Rabi frequency.
        delta0: Second-order shift of the line centre (zero for two-level channels).
    """
    kind: ChannelKind
    k: int
    delta: float
    omega0: float
    delta0: float = 0.0

    @property
    def hwhm(self) -> float:
        return 2.0 * abs(self.omega0)

    @property
    def offset(self) -> float:
        """Distance of the detuning from the line centre."""
        return self.delta - self.delta0

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "k": self.k,
            "delta": self.delta,
            "omega0": self.omega0,
            "delta0": self.delta0,
        }


@dataclass(frozen=True)
class PeakMeasurement:
    center: float
    height: float
    hwhm: float
    left: Optional[float] = None
    right: Optional[float] = None
