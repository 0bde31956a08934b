from enum import Enum

class ResonanceKind(Enum):
    """Multiphoton resonance conditions, each one an integer multiple of the drive frequency."""
    EPS1_PLUS_G = "eps1+g"
    EPS1_MINUS_G = "eps1-g"
    EPS2_PLUS_G = "eps2+g"
    EPS2_MINUS_G = "eps2-g"
    EPS1_PLUS_EPS2 = "eps1+eps2"
    EPS1_MINUS_EPS2 = "eps1-eps2"

    @property
    def coefficients(self) -> tuple[float, float, float]:
        """Weights of (eps1, eps2, g) in the resonance combination."""
        return _COEFFICIENTS[self]

_COEFFICIENTS = {
    ResonanceKind.EPS1_PLUS_G: (1.0, 0.0, 1.0),
    ResonanceKind.EPS1_MINUS_G: (1.0, 0.0, -1.0),
    ResonanceKind.EPS2_PLUS_G: (0.0, 1.0, 1.0),
    ResonanceKind.EPS2_MINUS_G: (0.0, 1.0, -1.0),
    ResonanceKind.EPS1_PLUS_EPS2: (1.0, 1.0, 0.0),
    ResonanceKind.EPS1_MINUS_EPS2: (1.0, -1.0, 0.0),
}
