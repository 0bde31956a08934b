from enum import Enum

class LogType(Enum):
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"

    @property
    def severity(self) -> int:
        return _SEVERITY[self]

    @classmethod
    def from_name(cls, name: str) -> "LogType":
        try:
            return cls(str(name).upper())
        except ValueError:
            return cls.INFO

_SEVERITY = {
    LogType.DEBUG: 10,
    LogType.INFO: 20,
    LogType.WARNING: 30,
    LogType.ERROR: 40,
}
