from enum import Enum

class PointFlag(Enum):
    RESONANT = "resonant"
    ANALYTIC_REFUSED = "analytic_refused"
    TRUNCATION_TAIL = "truncation_tail"
    RWA_DEGENERATE = "rwa_degenerate"
    WEAK_COUPLING = "weak_coupling"
    FAILED = "failed"
