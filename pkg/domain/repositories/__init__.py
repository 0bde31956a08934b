from .interfaces import IMetadataRepository, IOverlayRepository, IResultRepository

__all__ = ["IMetadataRepository", "IOverlayRepository", "IResultRepository"]
