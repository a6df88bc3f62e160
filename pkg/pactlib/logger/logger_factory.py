from pactlib.exception import UsageErr
from pactlib.utility import DictEx
from ..logger.console_logger import ConsoleLogger
from ..logger.ilogger import ILogger
from ..logger.json_lines_logger import JsonLinesLogger
from ..logger.log_level import LogLevel
from ..logger.no_logger import NoLogger


class LoggerFactory:

    @staticmethod
    def create(options: DictEx) -> ILogger:
        logger_type = options.logger if options.has("logger") else None
        if not logger_type or str(logger_type).lower() == "none":
            return NoLogger()
        try:
            level = LogLevel.from_name(options.log_level or "info")
        except ValueError as ex:
            raise UsageErr(str(ex)) from ex
        logger_type = str(logger_type)
        if logger_type.lower() == "console":
            return ConsoleLogger(level)
        if logger_type.lower().startswith("jsonl:"):
            path = logger_type[len("jsonl:"):]
            if not path:
                raise UsageErr("jsonl logger needs a file path")
            return JsonLinesLogger(path, level)
        raise UsageErr(f"Type '{logger_type}' not support for logger")
