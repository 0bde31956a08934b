from __future__ import annotations

from abc import ABC, abstractmethod

from domain.entities.resonance import ResonanceCatalog
from domain.entities.sweep import ResultTable


class IResultRepository(ABC):
    @abstractmethod
    def add(self, table: ResultTable, path: str) -> None:
        """
        Persist a finished sweep table.

        Args:
            table (ResultTable): Metadata, column names and ordered rows.
            path (str): Destination of the table.
        """
        raise NotImplementedError()


class IOverlayRepository(ABC):
    @abstractmethod
    def add(self, catalog: ResonanceCatalog, metadata: dict, path: str) -> None:
        """
        Persist the resonance lines that belong to a sweep window.

        Args:
            catalog (ResonanceCatalog): Lines labelled by condition and photon number.
            metadata (dict): Run description written as header lines.
            path (str): Destination of the overlay.
        """
        raise NotImplementedError()


class IMetadataRepository(ABC):
    @abstractmethod
    def add(self, metadata: dict, path: str) -> None:
        """
        Persist the run description next to its results.

        Args:
            metadata (dict): Parameters, tolerances, cutoffs and code version.
            path (str): Destination of the sidecar.
        """
        raise NotImplementedError()
