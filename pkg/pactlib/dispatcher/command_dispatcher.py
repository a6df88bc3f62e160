"""Subcommand registry and argv dispatching"""
import getopt
import json
import sys
from typing import Any, Callable, TextIO

from pactlib.context import CommandContext
from pactlib.exception import ExitCodes, PactErr, UsageErr
from pactlib.utility import DEFAULT_OPTIONS, ConfigFile, DictEx, ValueParser
from ..dispatcher.callback_info import CallbackInfo

COMMON_KEYS = ("config", "report")
# keys that may repeat on the command line and collect into a list
LIST_KEYS = ("corpus",)


def _flag(key: str) -> str:
    return key.replace("_", "-")


def _key(flag: str) -> str:
    return flag.lstrip("-").replace("-", "_")


class CommandDispatcher:
    """Routes `argv` to the handler registered for its subcommand"""

    def __init__(self, options: dict = None):
        self.options = DictEx(options)
        self.__look_up: 'dict[str, CallbackInfo]' = dict()

    def command(self, name: str, usage: str, *io_keys: str):
        """Decorator for determine a subcommand; the handler returns the report payload"""

        def _decorator(handler: 'Callable[[CommandContext], Any]'):
            self.__look_up[name] = CallbackInfo(name, usage, io_keys, handler)
            return handler
        return _decorator

    @property
    def commands(self) -> 'list[str]':
        return list(self.__look_up.keys())

    def usage(self, name: str = None) -> str:
        if name in self.__look_up:
            info = self.__look_up[name]
            return f"usage: pactlib {info.name} {info.usage} [--config FILE] [--report FILE] [--<option> VALUE ...]"
        lines = ["usage: pactlib <command> [options]", "", "commands:"]
        lines.extend(f"  {info.name} {info.usage}" for info in self.__look_up.values())
        lines.append("")
        lines.append("options (flag > config file > default):")
        lines.extend(f"  --{_flag(key)} (default {value})" for key, value in DEFAULT_OPTIONS.items())
        return "\n".join(lines)

    def parse(self, argv: 'list[str]') -> 'tuple[CallbackInfo, DictEx, list[str]]':
        """Resolve the subcommand and its layered options"""

        if not argv:
            raise UsageErr("No command given", self.usage())
        name = argv[0]
        if name not in self.__look_up:
            raise UsageErr(f"Unknown command '{name}'", self.usage())
        info = self.__look_up[name]
        known = set(DEFAULT_OPTIONS.keys()) | set(info.io_keys) | set(COMMON_KEYS)
        long_options = ["help"]
        for key in sorted(known):
            if isinstance(DEFAULT_OPTIONS.get(key), bool):
                long_options.extend([_flag(key), f"no-{_flag(key)}"])
            else:
                long_options.append(f"{_flag(key)}=")
        try:
            arguments, rest = getopt.gnu_getopt(argv[1:], "h", long_options)
        except getopt.error as err:
            raise UsageErr(str(err), self.usage(name)) from err
        flags = DictEx()
        for current_argument, current_value in arguments:
            if current_argument in ("-h", "--help"):
                flags["help"] = True
                continue
            key = _key(current_argument)
            if key.startswith("no_") and key[3:] in known:
                flags[key[3:]] = False
            elif isinstance(DEFAULT_OPTIONS.get(key), bool):
                flags[key] = True
            elif key in LIST_KEYS:
                flags.setdefault(key, []).append(current_value)
            elif key in DEFAULT_OPTIONS:
                flags[key] = ValueParser.parse(current_value)
            else:
                flags[key] = current_value
        config = DictEx()
        if flags.config:
            config = ConfigFile.load(flags.config)
            unknown = config.reject_unknown(known)
            if unknown:
                raise UsageErr(f"Unknown config keys: {', '.join(unknown)}", self.usage(name))
        return info, DEFAULT_OPTIONS.merge(self.options, config, flags), rest

    def dispatch(self, argv: 'list[str]', stdout: TextIO = None, stderr: TextIO = None) -> int:
        stdout = stdout or sys.stdout
        stderr = stderr or sys.stderr
        try:
            info, options, rest = self.parse(argv)
            if options.help:
                print(self.usage(info.name), file=stdout)
                return ExitCodes.SUCCESS
            context = CommandContext(self, info.name, options, rest, stdout)
            payload = info.execute(context)
            context.write_report(payload)
            return context.exit_code
        except PactErr as ex:
            print(json.dumps(ex.to_dict(), ensure_ascii=False), file=stderr)
            if isinstance(ex, UsageErr) and ex.usage:
                print(ex.usage, file=stderr)
            return ex.exit_code
        except Exception as ex:
            print(json.dumps({"errorCode": "internal", "errorMessage": str(ex)}, ensure_ascii=False), file=stderr)
            return ExitCodes.FAILURE
