from __future__ import annotations
from abc import ABC, abstractmethod
from enum import Enum
import datetime
import json
import os
import sys
import traceback
from typing import Any, TextIO

import numpy as np

from helpers.enums.log_type import LogType


def _jsonable(value: Any) -> Any:
    """Fallback encoder for metadata values json cannot handle (numpy scalars and arrays, complex, enums)."""
    if isinstance(value, (np.ndarray, np.generic)):
        value = value.tolist()
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) if isinstance(item, (complex, list, Enum)) else item for item in value]
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (int, float, str, bool)) or value is None:
        return value
    return str(value)


class AbstractLogger(ABC):
    __instance: 'AbstractLogger' | None = None

    @abstractmethod
    def log(self, message: str, level: LogType = LogType.INFO, module: str | None = None, metadata: dict[str, Any] | None = None, error: Exception | None = None):
        """
        Logs a message with the given level, module, metadata, and optional error.
        Args:
            message (str): The log message.
            level (LogType, optional): The log level. Defaults to LogType.INFO.
            module (str | None, optional): Component emitting the event. Defaults to None.
            metadata (dict[str, Any] | None, optional): Sweep point, parameters or counters. Defaults to None.
            error (Exception | None, optional): Exception behind the event. Defaults to None.
        """
        raise NotImplementedError("Subclasses must implement this method")

    @abstractmethod
    def bind(self, **context: Any) -> 'AbstractLogger':
        """
        Returns a logger that adds `context` to the metadata of every event.
        """
        raise NotImplementedError("Subclasses must implement this method")

    def info(self, message: str, module: str | None = None, metadata: dict[str, Any] | None = None, error: Exception | None = None):
        """
        Logs an INFO event.
        Args:
            message (str): The log message.
            module (str | None, optional): Component emitting the event. Defaults to None.
            metadata (dict[str, Any] | None, optional): Extra fields for the event. Defaults to None.
            error (Exception | None, optional): Exception to summarise. Defaults to None.
        """
        return self.log(message, LogType.INFO, module, metadata, error)

    def warning(self, message: str, module: str | None = None, metadata: dict[str, Any] | None = None, error: Exception | None = None):
        """
        Logs a WARNING event; an error is summarised as type and message.
        Args:
            message (str): The log message.
            module (str | None, optional): Component emitting the event. Defaults to None.
            metadata (dict[str, Any] | None, optional): Extra fields for the event. Defaults to None.
            error (Exception | None, optional): Exception behind the warning. Defaults to None.
        """
        return self.log(message, LogType.WARNING, module, metadata, error)

    def error(self, message: str, module: str | None = None, metadata: dict[str, Any] | None = None, error: Exception | None = None):
        """
        Logs an ERROR event, followed by the traceback of `error` when given.
        Args:
            message (str): The log message.
            module (str | None, optional): Component emitting the event. Defaults to None.
            metadata (dict[str, Any] | None, optional): Extra fields for the event. Defaults to None.
            error (Exception | None, optional): Exception whose traceback is appended. Defaults to None.
        """
        return self.log(message, LogType.ERROR, module, metadata, error)

    def debug(self, message: str, module: str | None = None, metadata: dict[str, Any] | None = None, error: Exception | None = None):
        """
        Logs a DEBUG event, dropped unless the threshold is DEBUG.
        Args:
            message (str): The log message.
            module (str | None, optional): Component emitting the event. Defaults to None.
            metadata (dict[str, Any] | None, optional): Extra fields for the event. Defaults to None.
            error (Exception | None, optional): Exception to summarise. Defaults to None.
        """
        return self.log(message, LogType.DEBUG, module, metadata, error)

    @classmethod
    def get_instance(cls) -> 'AbstractLogger':
        """
        Returns the process-wide logger; each worker process builds its own from LOG_LEVEL.
        Returns:
            AbstractLogger: The singleton logger instance.
        """
        if cls.__instance is None:
            from globals import LOG_LEVEL
            cls.__instance = Logger(threshold=LogType.from_name(LOG_LEVEL))
        return cls.__instance


class Logger(AbstractLogger):
    """
    Writes one line per event to stderr, dropping events below the threshold. Lines carry the
    process id so that events from sweep workers can be told apart.
    """

    def __init__(self, threshold: LogType = LogType.INFO, stream: TextIO | None = None, context: dict[str, Any] | None = None):
        self.threshold = threshold
        self.stream = stream
        self.context = dict(context or {})

    def bind(self, **context: Any) -> 'Logger':
        return Logger(self.threshold, self.stream, {**self.context, **context})

    def log(self, message: str, level: LogType = LogType.INFO, module: str | None = None, metadata: dict[str, Any] | None = None, error: Exception | None = None):
        if level.severity < self.threshold.severity:
            return

        timestamp = datetime.datetime.now(datetime.timezone.utc).isoformat()
        module_part = f"{module} | " if module else ""
        log_entry = f"[{timestamp}] [{level.name}] [pid {os.getpid()}] {module_part}{message}"

        fields = {**self.context, **(metadata or {})}
        if error is not None and level != LogType.ERROR:
            fields["error"] = f"{type(error).__name__}: {error}"
        if fields:
            log_entry += f" | Metadata: {json.dumps(fields, default=_jsonable, ensure_ascii=False, sort_keys=True)}"

        if level == LogType.ERROR and error is not None:
            tb_string = "".join(traceback.format_exception(type(error), error, error.__traceback__))
            log_entry += f"\nTraceback for exception ({error}):\n{tb_string}"

        print(log_entry, file=self.stream or sys.stderr, flush=True)
