import asyncio
from abc import ABC, abstractmethod

from .log_level import LogLevel
from .log_object import LogObject


class ILogger(ABC):
    """Base class for logger"""

    def __init__(self, level: int = LogLevel.INFO) -> None:
        self.level = level

    @abstractmethod
    def log(self, log_object: LogObject):
        """log data"""

    async def log_async(self, log_object: LogObject):
        """log data async"""

        loop = asyncio.get_running_loop()
        await loop.run_in_executor(None, self.log, log_object)

    def is_enabled(self, level: int) -> bool:
        return level >= self.level

    def new_object_log(self, event: str, level: int = LogLevel.INFO, **kwargs) -> LogObject:
        """New object log"""
        return LogObject(event, level, **kwargs)

    def info(self, event: str, **kwargs):
        if self.is_enabled(LogLevel.INFO):
            self.log(LogObject(event, LogLevel.INFO, **kwargs))

    def warning(self, event: str, **kwargs):
        if self.is_enabled(LogLevel.WARNING):
            self.log(LogObject(event, LogLevel.WARNING, **kwargs))

    def debug(self, event: str, **kwargs):
        if self.is_enabled(LogLevel.DEBUG):
            self.log(LogObject(event, LogLevel.DEBUG, **kwargs))

    def error(self, event: str, **kwargs):
        if self.is_enabled(LogLevel.ERROR):
            self.log(LogObject(event, LogLevel.ERROR, **kwargs))
