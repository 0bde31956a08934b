from __future__ import annotations

from typing import Any, Optional


class ApplicationException(Exception):
    """Base class for spectroscope exceptions; the class docstring is the default message."""

    def __init__(self, message: Optional[str] = None) -> None:
        default_message = self.__class__.__doc__
        if default_message:
            default_message = default_message.strip()
        final_message = (message or default_message or self.__class__.__name__)
        self.message = final_message
        super().__init__(final_message)

    def __str__(self) -> str:
        return self.message

    def details(self) -> dict[str, Any]:
        """
        Structured context attached by subclasses, suitable for log metadata.
        Returns:
            dict[str, Any]: Exception name, message and any extra public attributes.
        """
        extra = {
            key: value for key, value in vars(self).items()
            if key != "message" and not key.startswith("_")
        }
        return {"exception": self.__class__.__name__, "message": self.message, **extra}
