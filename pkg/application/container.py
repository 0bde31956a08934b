from __future__ import annotations

from application.services import ConfigService, SpectroscopyService, SweepService
from globals import (
    ANALYTIC_GUARD_BAND,
    WEAK_COUPLING_RATIO,
    K_MAX_MARGIN,
    RESONANCE_TOLERANCE,
    ROUTE_AGREEMENT,
    RWA_ACTIVE_WINDOW,
    SHOW_PROGRESS,
    STEADY_STATE_MAX_ITERATIONS,
    TAIL_WARNING_THRESHOLD,
    VERSION,
)
from infrastructure.csv import (
    CsvOverlayRepository,
    CsvResultRepository,
    FileUnitOfWork,
    JsonMetadataRepository,
)
from infrastructure.scipy import LongPropagationStrategy, PropagatorFixedPointStrategy


class ServiceFactory:
    """
    Simple factory that builds service instances with their dependencies.
    Exposed as a singleton so every worker process wires its services once.
    """
    __instance: 'ServiceFactory' | None = None

    def __init__(self):
        # Shared stateless strategies
        self.steady_state_strategy = PropagatorFixedPointStrategy()
        self.fallback_strategy = LongPropagationStrategy(max_iterations=STEADY_STATE_MAX_ITERATIONS)

    @classmethod
    def get_instance(cls, refresh: bool = False) -> 'ServiceFactory':
        """
        Return the singleton instance.
        Args:
            refresh (bool): If True, forces creation of a new instance.
        Returns:
            ServiceFactory: The singleton instance.
        """
        if refresh or cls.__instance is None:
            cls.__instance = cls()
        return cls.__instance

    def run_metadata(self) -> dict:
        """Settings that shape the numbers in a result file, recorded next to them."""
        return {
            "version": VERSION,
            "k_max_margin": K_MAX_MARGIN,
            "resonance_tolerance": RESONANCE_TOLERANCE,
            "analytic_guard_band": ANALYTIC_GUARD_BAND,
            "route_agreement": ROUTE_AGREEMENT,
            "tail_warning_threshold": TAIL_WARNING_THRESHOLD,
            "weak_coupling_ratio": WEAK_COUPLING_RATIO,
            "rwa_active_window": RWA_ACTIVE_WINDOW,
        }

    def build_config_service(self) -> ConfigService:
        return ConfigService()

    def build_spectroscopy_service(self) -> SpectroscopyService:
        """
        Build a SpectroscopyService with its strategies and thresholds.
        Returns:
            SpectroscopyService: The constructed service.
        """
        return SpectroscopyService(
            steady_state_strategy=self.steady_state_strategy,
            fallback_strategy=self.fallback_strategy,
            k_max_margin=K_MAX_MARGIN,
            resonance_tolerance=RESONANCE_TOLERANCE,
            guard_band=ANALYTIC_GUARD_BAND,
            route_agreement=ROUTE_AGREEMENT,
            tail_threshold=TAIL_WARNING_THRESHOLD,
            validity_ratio=WEAK_COUPLING_RATIO,
            rwa_window=RWA_ACTIVE_WINDOW,
        )

    def build_sweep_service(self, show_progress: bool = SHOW_PROGRESS) -> SweepService:
        """
        Build a SweepService with its repositories and unit of work.
        Returns:
            SweepService: The constructed service.
        """
        uow = FileUnitOfWork()
        return SweepService(
            spectroscopy_service=self.build_spectroscopy_service(),
            result_repo=CsvResultRepository(uow),
            overlay_repo=CsvOverlayRepository(uow),
            metadata_repo=JsonMetadataRepository(uow),
            uow=uow,
            run_metadata=self.run_metadata(),
            show_progress=show_progress,
        )
