from enum import Enum

class SweepParameter(Enum):
    EPS1 = "eps1"
    EPS2 = "eps2"
    G = "g"
    AMPLITUDE = "amplitude"
    DELTA1 = "delta1"
    DELTA2 = "delta2"
