from __future__ import annotations

from typing import Callable, Dict, List, Optional

import numpy as np

from domain.entities.dissipation import Rates
from domain.entities.sweep import PointTask, ResultRow, SweepConfig
from domain.entities.system import Drive, SystemParams
from domain.services.dissipation import (
    averaged_probabilities_dissipative,
    periodic_steady_state,
    transient_average,
)
from domain.services.entanglement import averaged_concurrence
from domain.services.floquet import floquet_modes, s_matrix
from domain.services.model import weak_coupling_validity, stationary_basis
from domain.services.perturbation import chi_table, nonresonant_probabilities, quasienergy_2nd
from domain.services.rwa import nearest_channels, profile_value
from domain.strategies import ISteadyStateStrategy
from helpers.debugger.logger import AbstractLogger
from helpers.enums.point_flag import PointFlag
from helpers.enums.sweep_mode import SweepMode
from helpers.exceptions.base import ApplicationException
from helpers.exceptions.config_exceptions import InvalidConfigValueException
from helpers.exceptions.model_exceptions import ZeroBiasException
from helpers.exceptions.perturbation_exceptions import PoleProximityException, ResonantDenominatorException

GAMMA_COLUMNS = [f"gamma{a}" for a in range(1, 5)]
GAMMA_PT_COLUMNS = [f"gamma{a}_pt" for a in range(1, 5)]
PROBABILITY_COLUMNS = ["p12", "p13", "p14"]
PROBABILITY_PT_COLUMNS = ["p12_pt", "p13_pt", "p14_pt"]
PROBABILITY_RWA_COLUMNS = ["p12_rwa", "p13_rwa", "p14_rwa"]
DISSIPATIVE_COLUMNS = ["p11_diss", "p12_diss", "p13_diss", "p14_diss", "concurrence"]

REFUSALS = (ResonantDenominatorException, PoleProximityException, ZeroBiasException)


def columns_for(config: SweepConfig) -> List[str]:
    """
    Value columns written for a sweep, in output order (axes and flags excluded).
    """
    if config.mode == SweepMode.QUASIENERGIES:
        return GAMMA_COLUMNS + GAMMA_PT_COLUMNS
    if config.mode == SweepMode.DISSIPATIVE:
        extra = ["pulse_duration"] if config.transient else ["min_eigenvalue"]
        return DISSIPATIVE_COLUMNS + extra
    return GAMMA_COLUMNS + PROBABILITY_COLUMNS + PROBABILITY_PT_COLUMNS + PROBABILITY_RWA_COLUMNS


class SpectroscopyService:
    """
    Evaluates every observable of one sweep point.

    Failures of the numerical route void the whole row; refusals of the closed forms only
    void their own columns and raise a flag.
    """
    logger = AbstractLogger.get_instance()

    def __init__(
        self,
        steady_state_strategy: ISteadyStateStrategy,
        fallback_strategy: Optional[ISteadyStateStrategy],
        k_max_margin: int,
        resonance_tolerance: float,
        guard_band: float,
        route_agreement: float,
        tail_threshold: float,
        validity_ratio: float,
        rwa_window: float,
    ) -> None:
        self.steady_state_strategy = steady_state_strategy
        self.fallback_strategy = fallback_strategy
        self.k_max_margin = k_max_margin
        self.resonance_tolerance = resonance_tolerance
        self.guard_band = guard_band
        self.route_agreement = route_agreement
        self.tail_threshold = tail_threshold
        self.validity_ratio = validity_ratio
        self.rwa_window = rwa_window

    def evaluate(self, task: PointTask) -> ResultRow:
        """
        Evaluate one grid point.
        Args:
            task (PointTask): Sweep configuration and grid index.
        Returns:
            ResultRow: Values by column; failed points carry only a `failed:<Exception>` flag.
        """
        config = task.config
        row = ResultRow(index=task.index, axis_values=config.axis_values(task.index))
        handlers: Dict[SweepMode, Callable] = {
            SweepMode.QUASIENERGIES: self._quasienergies,
            SweepMode.SWEEP1D: self._closed,
            SweepMode.SWEEP2D: self._closed,
            SweepMode.GMAP: self._closed,
            SweepMode.DISSIPATIVE: self._dissipative,
        }
        try:
            p, d = config.point(row.axis_values)
            handlers[config.mode](config, p, d, row)
        except (ApplicationException, ArithmeticError, ValueError, np.linalg.LinAlgError) as exc:
            row.values = {}
            row.flags = [f"{PointFlag.FAILED.value}:{type(exc).__name__}"]
            row.vectors = None
            self.logger.warning(
                "Sweep point failed",
                module="SpectroscopyService",
                metadata={"index": list(task.index), "axis_values": list(row.axis_values)},
                error=exc,
            )
        return row

    def k_max(self, config: SweepConfig, d: Drive) -> int:
        return config.k_max if config.k_max is not None else d.harmonic_cutoff(self.k_max_margin)

    def _floquet(self, config: SweepConfig, p: SystemParams, d: Drive, row: ResultRow):
        basis = stationary_basis(p)
        solution = floquet_modes(
            p, d, config.tol, config.n_samples, self.k_max(config, d), self.resonance_tolerance, basis
        )
        row.vectors = solution.vectors
        for column, gamma in zip(GAMMA_COLUMNS, solution.gammas):
            row.values[column] = float(gamma)
        if solution.resonant:
            row.flag(PointFlag.RESONANT.value)
        if not weak_coupling_validity(p, self.validity_ratio):
            row.flag(PointFlag.WEAK_COUPLING.value)
        return solution, basis

    def _quasienergies(self, config: SweepConfig, p: SystemParams, d: Drive, row: ResultRow) -> None:
        self._floquet(config, p, d, row)
        try:
            table = chi_table(p, d, self.k_max(config, d), self.guard_band)
        except REFUSALS as exc:
            self._refuse(row, exc)
            return
        if table.tail_estimate > self.tail_threshold:
            row.flag(PointFlag.TRUNCATION_TAIL.value)
        for column, gamma in zip(GAMMA_PT_COLUMNS, quasienergy_2nd(p, d, table)):
            row.values[column] = float(gamma)

    def _closed(self, config: SweepConfig, p: SystemParams, d: Drive, row: ResultRow) -> None:
        solution, basis = self._floquet(config, p, d, row)
        transitions = s_matrix(solution, basis, self.route_agreement)
        for b, column in zip((2, 3, 4), PROBABILITY_COLUMNS):
            row.values[column] = transitions.probability(1, b)

        k_max = self.k_max(config, d)
        try:
            table = chi_table(p, d, k_max, self.guard_band)
            if table.tail_estimate > self.tail_threshold:
                row.flag(PointFlag.TRUNCATION_TAIL.value)
            analytic = nonresonant_probabilities(p, d, table, self.guard_band)
            row.values.update(dict(zip(PROBABILITY_PT_COLUMNS, analytic)))
        except REFUSALS as exc:
            self._refuse(row, exc)

        try:
            channels = nearest_channels(p, d, k_max)
        except REFUSALS as exc:
            self._refuse(row, exc)
            return
        for resonant, column in zip(channels, PROBABILITY_RWA_COLUMNS):
            if resonant.omega0 == 0:
                row.flag(PointFlag.RWA_DEGENERATE.value)
                row.values[column] = 0.0
            elif abs(resonant.offset) <= self.rwa_window * resonant.hwhm:
                row.values[column] = profile_value(resonant)

    def _dissipative(self, config: SweepConfig, p: SystemParams, d: Drive, row: ResultRow) -> None:
        rates: Optional[Rates] = config.rates
        if rates is None:
            raise InvalidConfigValueException("El mode dissipatiu necessita taxes", key="gamma_down")
        basis = stationary_basis(p)
        if config.transient:
            average = transient_average(p, d, rates, 1, config.tol, config.n_samples, basis)
            probabilities, concurrence = average.probabilities, average.concurrence
            row.values["pulse_duration"] = average.duration
        else:
            state = periodic_steady_state(
                p, d, rates, config.tol, config.n_samples,
                self.steady_state_strategy, self.fallback_strategy,
            )
            probabilities = averaged_probabilities_dissipative(state, basis)
            concurrence = averaged_concurrence(state.rhos)
            row.values["min_eigenvalue"] = state.min_eigenvalue
        for column, value in zip(DISSIPATIVE_COLUMNS, list(probabilities) + [concurrence]):
            row.values[column] = float(value)
        if not weak_coupling_validity(p, self.validity_ratio):
            row.flag(PointFlag.WEAK_COUPLING.value)

    def _refuse(self, row: ResultRow, exc: ApplicationException) -> None:
        row.flag(PointFlag.ANALYTIC_REFUSED.value)
        self.logger.debug(
            "Closed form refused at sweep point",
            module="SpectroscopyService",
            metadata={"axis_values": list(row.axis_values), **exc.details()},
        )


def evaluate_point(task: PointTask) -> ResultRow:
    """Pool entry point; each worker process builds its own service."""
    from application.container import ServiceFactory

    return ServiceFactory.get_instance().build_spectroscopy_service().evaluate(task)
