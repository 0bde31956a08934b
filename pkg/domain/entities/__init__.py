# Re-export domain entities for convenience.
from .system import SystemParams, Drive
from .grid import TimeGrid
from .floquet import FloquetSolution, TransitionTable
from .perturbation import ChiTable
from .resonance import ResonanceLine, ResonanceCatalog, ResonantChannel, PeakMeasurement
from .dissipation import Rates, LindbladOperators, PeriodMap, PeriodicState, TransientAverage
from .sweep import SweepAxis, SweepConfig, PointTask, ResultRow, ResultTable

__all__ = [
    "SystemParams",
    "Drive",
    "TimeGrid",
    "FloquetSolution",
    "TransitionTable",
    "ChiTable",
    "ResonanceLine",
    "ResonanceCatalog",
    "ResonantChannel",
    "PeakMeasurement",
    "Rates",
    "LindbladOperators",
    "PeriodMap",
    "PeriodicState",
    "TransientAverage",
    "SweepAxis",
    "SweepConfig",
    "PointTask",
    "ResultRow",
    "ResultTable",
]
