from .config_service import ConfigService
from .spectroscopy_service import SpectroscopyService
from .sweep_service import SweepService

__all__ = ["ConfigService", "SpectroscopyService", "SweepService"]
