from enum import Enum

class SweepMode(Enum):
    QUASIENERGIES = "quasienergies"
    SWEEP1D = "sweep1d"
    SWEEP2D = "sweep2d"
    GMAP = "gmap"
    DISSIPATIVE = "dissipative"

    @property
    def dimensions(self) -> int:
        return 2 if self in (SweepMode.SWEEP2D, SweepMode.GMAP) else 1
