from ..logger.ilogger import ILogger
from ..logger.log_object import LogObject


class NoLogger(ILogger):
    """class for no logging"""

    def log(self, log_object: LogObject):
        """log data"""

    async def log_async(self, log_object: LogObject):
        """log data async"""

    def is_enabled(self, level: int) -> bool:
        return False
