from __future__ import annotations

from typing import Optional

from helpers.exceptions.base import ApplicationException


class InvalidConfigKeyException(ApplicationException):
    """Clau de configuració desconeguda."""

    def __init__(self, message: Optional[str] = None, key: str = "") -> None:
        self.key = key
        super().__init__(message or f"Clau de configuració desconeguda: '{key}'")


class InvalidConfigValueException(ApplicationException):
    """Valor de configuració no vàlid."""

    def __init__(self, message: Optional[str] = None, key: str = "") -> None:
        self.key = key
        super().__init__(message or f"Valor no vàlid per a la clau '{key}'")


class OutputWriteException(ApplicationException):
    """No s'han pogut escriure els fitxers de resultats."""
