from pactlib.logger.log_level import LogLevel
from pactlib.logger.log_object import LogObject
from pactlib.logger.ilogger import ILogger
from pactlib.logger.no_logger import NoLogger
from pactlib.logger.console_logger import ConsoleLogger
from pactlib.logger.json_lines_logger import JsonLinesLogger
from pactlib.logger.logger_factory import LoggerFactory
