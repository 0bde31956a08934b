from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional

from tqdm import tqdm

from application.services.spectroscopy_service import GAMMA_COLUMNS, SpectroscopyService, columns_for, evaluate_point
from domain.entities.resonance import ResonanceCatalog
from domain.entities.sweep import PointTask, ResultRow, ResultTable, SweepConfig
from domain.repositories.interfaces import IMetadataRepository, IOverlayRepository, IResultRepository
from domain.services.floquet import track_branches
from domain.services.perturbation import resonance_catalog
from domain.unit_of_work import IUnitOfWork
from helpers.debugger.logger import AbstractLogger
from helpers.enums.point_flag import PointFlag
from helpers.enums.sweep_mode import SweepMode

METADATA_SUFFIX = ".meta.json"
OVERLAY_SUFFIX = ".overlay.csv"


def metadata_path(output: str) -> str:
    return output + METADATA_SUFFIX


def overlay_path(output: str) -> str:
    return output + OVERLAY_SUFFIX


class SweepService:
    """
    Runs whole sweeps: fans points out to a worker pool, restores grid order and publishes the
    table, its sidecar and the resonance overlay in one unit of work.
    """
    logger = AbstractLogger.get_instance()

    def __init__(
        self,
        spectroscopy_service: SpectroscopyService,
        result_repo: IResultRepository,
        overlay_repo: IOverlayRepository,
        metadata_repo: IMetadataRepository,
        uow: IUnitOfWork,
        run_metadata: dict,
        show_progress: bool = True,
    ) -> None:
        self.spectroscopy_service = spectroscopy_service
        self.result_repo = result_repo
        self.overlay_repo = overlay_repo
        self.metadata_repo = metadata_repo
        self.uow = uow
        self.run_metadata = run_metadata
        self.show_progress = show_progress

    def metadata(self, config: SweepConfig) -> dict:
        """Run description shared by every output file; identical configs give identical metadata."""
        return {**config.metadata(), **self.run_metadata}

    def evaluate(self, config: SweepConfig) -> List[ResultRow]:
        """
        Evaluate every grid point in output order.
        Args:
            config (SweepConfig): Validated sweep.
        Returns:
            List[ResultRow]: One row per point, first axis varying fastest.
        """
        tasks = [PointTask(config, index) for index in config.point_indices()]
        progress = dict(total=len(tasks), disable=not self.show_progress, unit="pt", desc=config.mode.value)
        if config.workers <= 1:
            rows = [self.spectroscopy_service.evaluate(task) for task in tqdm(tasks, **progress)]
        else:
            with ProcessPoolExecutor(max_workers=config.workers) as executor:
                chunksize = max(1, len(tasks) // (4 * config.workers))
                rows = list(tqdm(executor.map(evaluate_point, tasks, chunksize=chunksize), **progress))
        if config.mode == SweepMode.QUASIENERGIES:
            track_quasienergy_branches(config, rows)
        return rows

    def run(self, config: SweepConfig) -> ResultTable:
        """
        Run a sweep and publish its outputs.
        Args:
            config (SweepConfig): Validated sweep.
        Returns:
            ResultTable: The table that was written.
        Raises:
            OutputWriteException: If an output file cannot be written; nothing is published then.
        """
        n_points = len(config.point_indices())
        logger = self.logger.bind(mode=config.mode.value, output=config.output)
        logger.info("Sweep started", module="SweepService", metadata={"points": n_points, "workers": config.workers})
        metadata = self.metadata(config)
        rows = self.evaluate(config)
        table = ResultTable(
            metadata=metadata,
            axis_names=[axis.parameter.value for axis in config.axes],
            columns=columns_for(config),
            rows=rows,
        )
        failed = sum(1 for row in rows if any(flag.startswith(PointFlag.FAILED.value) for flag in row.flags))
        sidecar = {**metadata, "columns": table.axis_names + table.columns, "points": n_points, "failed_points": failed}

        with self.uow:
            self.result_repo.add(table, config.output)
            self.metadata_repo.add(sidecar, metadata_path(config.output))
            if config.overlay:
                self.overlay_repo.add(self.emit_resonance_overlays(config), metadata, overlay_path(config.output))

        logger.info("Sweep finished", module="SweepService", metadata={"points": n_points, "failed": failed})
        return table

    def emit_resonance_overlays(self, config: SweepConfig) -> ResonanceCatalog:
        """
        Resonance lines crossing the sweep window, for plotting next to the table.
        """
        return resonance_catalog(config.params, config.drive, config.axes, config.ratio)


def track_quasienergy_branches(config: SweepConfig, rows: List[ResultRow]) -> None:
    """
    Reorder gamma columns so that each column follows one continuous branch along the first axis.

    Each line of the first axis starts from the basis labelling of its first point; failed points
    break the chain.
    """
    line_length = config.axes[0].n_points
    previous: Optional[ResultRow] = None
    for position, row in enumerate(rows):
        if position % line_length == 0:
            previous = None
        if row.vectors is None or not row.values:
            previous = None
            continue
        if previous is not None:
            perm = track_branches(previous.vectors, row.vectors)
            gammas = [row.values[column] for column in GAMMA_COLUMNS]
            for branch, column in enumerate(GAMMA_COLUMNS):
                row.values[column] = gammas[perm[branch]]
            row.vectors = row.vectors[:, perm]
        previous = row
