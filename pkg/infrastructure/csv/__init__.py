from .repositories import CsvOverlayRepository, CsvResultRepository, JsonMetadataRepository
from .unit_of_work import FileUnitOfWork

__all__ = [
    "CsvOverlayRepository",
    "CsvResultRepository",
    "FileUnitOfWork",
    "JsonMetadataRepository",
]
