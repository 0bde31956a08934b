from __future__ import annotations

import math
from dataclasses import asdict, dataclass, replace

from helpers.exceptions.model_exceptions import InvalidParametersException


@dataclass(frozen=True)
class SystemParams:
    """
    Static parameters of the coupled qubit pair, in frequency units with hbar = 1.

    Attributes:
        eps1, eps2: Energy biases of qubit 1 and qubit 2.
        delta1, delta2: Tunnel splittings (non-negative).
        g: Signed coupling strength of the sigma_z sigma_z interaction.
    """
    eps1: float
    eps2: float
    delta1: float
    delta2: float
    g: float

    def __post_init__(self) -> None:
        values = (self.eps1, self.eps2, self.delta1, self.delta2, self.g)
        if not all(math.isfinite(v) for v in values):
            raise InvalidParametersException("System parameters must be finite")
        if self.delta1 < 0 or self.delta2 < 0:
            raise InvalidParametersException("Tunnel splittings must be non-negative")

    def eps(self, qubit: int) -> float:
        return self.eps1 if qubit == 1 else self.eps2

    def delta(self, qubit: int) -> float:
        return self.delta1 if qubit == 1 else self.delta2

    def with_values(self, **changes: float) -> SystemParams:
        return replace(self, **changes)

    def to_dict(self) -> dict:
        """
        Serialize the parameters to a dictionary.
        Returns:
            dict: Public representation of the parameters.
        """
        return asdict(self)


@dataclass(frozen=True)
class Drive:
    """
    Harmonic bias modulation v(t) = A cos(omega t - phi0), applied with equal amplitude to both qubits.
    """
    amplitude: float
    omega: float
    phi0: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.amplitude) and math.isfinite(self.omega) and math.isfinite(self.phi0)):
            raise InvalidParametersException("Drive parameters must be finite")
        if self.omega <= 0:
            raise InvalidParametersException("Drive frequency must be positive")
        if not 0.0 <= self.phi0 < 2.0 * math.pi:
            raise InvalidParametersException("Drive phase must lie in [0, 2*pi)")

    @property
    def period(self) -> float:
        return 2.0 * math.pi / self.omega

    @property
    def bessel_argument(self) -> float:
        """A / omega, the argument of every Bessel factor."""
        return self.amplitude / self.omega

    def field(self, t):
        return self.amplitude * math.cos(self.omega * t - self.phi0)

    def harmonic_cutoff(self, margin: int) -> int:
        return int(math.ceil(abs(self.bessel_argument))) + margin

    def with_phase(self, phi0: float) -> Drive:
        return replace(self, phi0=float(phi0) % (2.0 * math.pi))

    def with_values(self, **changes: float) -> Drive:
        return replace(self, **changes)

    def to_dict(self) -> dict:
        """
        Serialize the drive to a dictionary.
        Returns:
            dict: Public representation of the drive.
        """
        return asdict(self)
