import json
from pathlib import Path
from typing import TYPE_CHECKING, TextIO

from pactlib.codec import CodecConfig
from pactlib.exception import ExitCodes, UsageErr
from pactlib.extract import ExtractionConfig
from pactlib.kernel import Environment, load_environment
from pactlib.logger import ILogger, LoggerFactory
from pactlib.search import SearchConfig
from pactlib.utility import DictEx, TOY_ENVIRONMENT, resolve_data_path

if TYPE_CHECKING:
    from pactlib import dispatcher

SCHEMA_VERSION = 1


class CommandContext:
    """Everything a subcommand handler needs: layered options, logger, lazily loaded environment"""

    def __init__(self, dispatcher: 'dispatcher.CommandDispatcher', command: str, options: DictEx,
                 args: 'list[str]' = None, stdout: TextIO = None) -> None:
        self.dispatcher = dispatcher
        self.command = command
        self.options = options
        self.args = list(args or [])
        self.exit_code = ExitCodes.SUCCESS
        self.__stdout = stdout
        self.__logger: ILogger = LoggerFactory.create(options)
        self.__environment: Environment = None

    @property
    def logger(self) -> ILogger:
        return self.__logger

    def require(self, key: str):
        value = self.options.get(key)
        if value is None or value == "":
            flag = key.replace("_", "-")
            raise UsageErr(f"Missing --{flag}", self.dispatcher.usage(self.command))
        return value

    def data_path(self, key: str, default: 'str|Path' = None) -> str:
        value = self.options.get(key)
        if value is None:
            if default is None:
                return self.require(key)
            return str(default)
        return resolve_data_path(str(value))

    def environment(self) -> Environment:
        if self.__environment is None:
            path = self.data_path("env", TOY_ENVIRONMENT)
            if not Path(path).exists():
                raise UsageErr(f"Environment file '{path}' not found")
            self.__environment = load_environment(path)
            self.logger.debug("environment.loaded", path=path, declarations=len(self.__environment))
        return self.__environment

    def search_config(self) -> SearchConfig:
        return self.__config(SearchConfig.from_options)

    def extraction_config(self) -> ExtractionConfig:
        return self.__config(ExtractionConfig.from_options)

    def codec_config(self) -> CodecConfig:
        return self.__config(CodecConfig.from_options)

    def __config(self, factory):
        try:
            return factory(self.options)
        except (ValueError, TypeError) as ex:
            raise UsageErr(str(ex), self.dispatcher.usage(self.command)) from ex

    def write_report(self, payload: dict):
        report = {"schema_version": SCHEMA_VERSION, "command": self.command}
        report.update(payload or {})
        text = json.dumps(report, ensure_ascii=False, indent=2)
        if self.options.report:
            Path(self.options.report).parent.mkdir(parents=True, exist_ok=True)
            Path(self.options.report).write_text(text + "\n", encoding="utf-8")
        else:
            print(text, file=self.__stdout)
