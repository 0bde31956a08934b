from __future__ import annotations

import os
import tempfile
from typing import Dict

from domain.unit_of_work import IUnitOfWork
from helpers.exceptions.config_exceptions import OutputWriteException


class FileUnitOfWork(IUnitOfWork):
    """
    Unit of Work over plain files: writes go to temporary files next to their destination and
    are moved into place with os.replace on commit.
    """

    def __init__(self) -> None:
        self._staged: Dict[str, str] = {}

    def stage(self, path: str) -> str:
        if path in self._staged:
            return self._staged[path]
        directory = os.path.dirname(os.path.abspath(path))
        try:
            os.makedirs(directory, exist_ok=True)
            handle, temporary = tempfile.mkstemp(
                prefix=f".{os.path.basename(path)}.", suffix=".part", dir=directory
            )
            os.close(handle)
        except OSError as exc:
            raise OutputWriteException(f"No s'ha pogut preparar el fitxer '{path}': {exc}") from exc
        self._staged[path] = temporary
        return temporary

    def commit(self) -> None:
        try:
            for final, temporary in self._staged.items():
                os.replace(temporary, final)
        except OSError as exc:
            raise OutputWriteException(f"No s'han pogut publicar els resultats: {exc}") from exc
        self._staged = {}

    def rollback(self) -> None:
        for temporary in self._staged.values():
            try:
                os.remove(temporary)
            except FileNotFoundError:
                pass
        self._staged = {}
