import logging


class LogLevel:
    DEBUG = logging.DEBUG
    INFO = logging.INFO
    WARNING = logging.WARNING
    ERROR = logging.ERROR

    __NAMES = {
        "debug": logging.DEBUG,
        "info": logging.INFO,
        "warning": logging.WARNING,
        "warn": logging.WARNING,
        "error": logging.ERROR,
    }

    @staticmethod
    def from_name(name: str) -> int:
        level = LogLevel.__NAMES.get(str(name).strip().lower())
        if level is None:
            raise ValueError(f"Unknown log level '{name}'")
        return level

    @staticmethod
    def to_name(level: int) -> str:
        return logging.getLevelName(level).lower()
