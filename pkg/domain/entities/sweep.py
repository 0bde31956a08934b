from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Tuple

import numpy as np

from domain.entities.dissipation import Rates
from domain.entities.system import Drive, SystemParams
from helpers.enums.sweep_mode import SweepMode
from helpers.enums.sweep_parameter import SweepParameter


@dataclass(frozen=True)
class SweepAxis:
    parameter: SweepParameter
    minimum: float
    maximum: float
    n_points: int

    def values(self) -> np.ndarray:
        return np.linspace(self.minimum, self.maximum, self.n_points)

    def to_dict(self) -> dict:
        return {
            "parameter": self.parameter.value,
            "minimum": self.minimum,
            "maximum": self.maximum,
            "n_points": self.n_points,
        }


@dataclass(frozen=True)
class SweepConfig:
    """
    Complete description of one batch run.

    Attributes:
        mode: What is computed at every point.
        params: Base system parameters; swept entries are overwritten per point.
        drive: Base drive.
        axes: One axis for 1D modes, two for maps (the first axis varies fastest).
        ratio: When set, eps2 = ratio * eps1 at every point.
        rates: Dissipation rates (dissipative mode only).
        tol: Integrator tolerance.
        n_samples: Period grid size.
        k_max: Harmonic cutoff; None means ceil(A/omega) + margin.
        transient: Report pulse-window averages instead of steady-state ones.
        overlay: Emit the resonance overlay next to the CSV.
        output: CSV path.
        workers: Worker process count.
    """
    mode: SweepMode
    params: SystemParams
    drive: Drive
    axes: Tuple[SweepAxis, ...]
    ratio: Optional[float] = None
    rates: Optional[Rates] = None
    tol: float = 1e-10
    n_samples: int = 1024
    k_max: Optional[int] = None
    transient: bool = False
    overlay: bool = True
    output: str = "results.csv"
    workers: int = 1

    def point_indices(self) -> List[Tuple[int, ...]]:
        """Grid indices in output order, with the first axis varying fastest."""
        ranges = [range(axis.n_points) for axis in self.axes]
        return [tuple(reversed(index)) for index in product(*reversed(ranges))]

    def axis_values(self, index: Tuple[int, ...]) -> Tuple[float, ...]:
        return tuple(float(axis.values()[i]) for axis, i in zip(self.axes, index))

    def point(self, values: Tuple[float, ...]) -> Tuple[SystemParams, Drive]:
        """
        Parameters at one sweep point.
        Args:
            values (Tuple[float, ...]): Values of the swept axes, in axis order.
        Returns:
            Tuple[SystemParams, Drive]: Point parameters with the eps2 link applied.
        """
        system_changes: Dict[str, float] = {}
        drive_changes: Dict[str, float] = {}
        for axis, value in zip(self.axes, values):
            if axis.parameter == SweepParameter.AMPLITUDE:
                drive_changes["amplitude"] = value
            else:
                system_changes[axis.parameter.value] = value
        params = self.params.with_values(**system_changes)
        if self.ratio is not None:
            params = params.with_values(eps2=self.ratio * params.eps1)
        drive = self.drive.with_values(**drive_changes) if drive_changes else self.drive
        return params, drive

    def metadata(self) -> dict:
        """Run description written next to the results; excludes anything that varies between identical runs."""
        return {
            "mode": self.mode.value,
            "params": self.params.to_dict(),
            "drive": self.drive.to_dict(),
            "axes": [axis.to_dict() for axis in self.axes],
            "ratio": self.ratio,
            "rates": self.rates.to_dict() if self.rates else None,
            "tol": self.tol,
            "n_samples": self.n_samples,
            "k_max": self.k_max,
            "transient": self.transient,
        }


@dataclass(frozen=True)
class PointTask:
    config: SweepConfig
    index: Tuple[int, ...]


@dataclass
class ResultRow:
    """
    One evaluated sweep point. Values missing for a point are NaN; `flags` explains why.
    """
    index: Tuple[int, ...]
    axis_values: Tuple[float, ...]
    values: Dict[str, float] = field(default_factory=dict)
    flags: List[str] = field(default_factory=list)
    vectors: Optional[np.ndarray] = None

    def flag(self, name: str) -> None:
        if name not in self.flags:
            self.flags.append(name)

    def record(self, columns: List[str]) -> List[float]:
        return [self.values.get(column, float("nan")) for column in columns]

    def to_dict(self) -> dict:
        return {
            "index": list(self.index),
            "axis_values": list(self.axis_values),
            "values": dict(self.values),
            "flags": list(self.flags),
        }


@dataclass(frozen=True)
class ResultTable:
    metadata: dict
    axis_names: List[str]
    columns: List[str]
    rows: List[ResultRow]
