import logging
import sys

from ..logger.ilogger import ILogger
from ..logger.log_level import LogLevel
from ..logger.log_object import LogObject


class ConsoleLogger(ILogger):
    """Human readable log lines on stderr"""

    def __init__(self, level: int = LogLevel.INFO, stream=None) -> None:
        super().__init__(level)
        self.__logger = logging.getLogger(f"pactlib.{id(self)}")
        self.__logger.propagate = False
        self.__logger.setLevel(level)
        handler = logging.StreamHandler(stream if stream is not None else sys.stderr)
        handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(message)s"))
        self.__logger.addHandler(handler)

    def log(self, log_object: LogObject):
        if self.is_enabled(log_object.level):
            self.__logger.log(log_object.level, str(log_object))
