"""Main module of pactlib. Wires every subcommand into one dispatcher"""

import sys

from pactlib.commands import register_commands
from pactlib.dispatcher import CommandDispatcher
from pactlib.utility import ConfigFile
from pactlib import __version__


def from_config(option_file_path: str) -> CommandDispatcher:
    """Create CommandDispatcher obj whose base options come from a `key = value` file"""

    return from_options(ConfigFile.load(option_file_path))


def from_options(options: dict = None) -> CommandDispatcher:
    """Create CommandDispatcher obj from config object"""

    return register_commands(CommandDispatcher(options))


def main(argv: 'list[str]' = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if argv and argv[0] == "--version":
        print(f"pactlib {__version__}")
        return 0
    dispatcher = from_options()
    if argv and argv[0] in ("-h", "--help"):
        print(dispatcher.usage())
        return 0
    return dispatcher.dispatch(argv)
