import json
import threading
from datetime import datetime, timezone

from ..logger.ilogger import ILogger
from ..logger.log_level import LogLevel
from ..logger.log_object import LogObject


class JsonLinesLogger(ILogger):
    """Append one JSON object per event to a file"""

    def __init__(self, path: str, level: int = LogLevel.INFO) -> None:
        super().__init__(level)
        self.path = path
        self.__lock = threading.Lock()

    def log(self, log_object: LogObject):
        if not self.is_enabled(log_object.level):
            return
        record = {"time": datetime.now(timezone.utc).isoformat()}
        record.update(log_object.to_dict())
        line = json.dumps(record, ensure_ascii=False, default=str)
        with self.__lock:
            with open(self.path, "a", encoding="utf-8") as log_file:
                log_file.write(line + "\n")
