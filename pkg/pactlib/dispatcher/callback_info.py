import asyncio
import inspect
from typing import Any, Callable, TYPE_CHECKING

if TYPE_CHECKING:
    from pactlib.context import CommandContext


class CallbackInfo:
    """A registered subcommand: its handler, the option keys it reads and its usage line"""

    def __init__(self, name: str, usage: str, io_keys: 'list[str]', callback: 'Callable[[CommandContext], Any]'):
        self.name = name
        self.usage = usage
        self.io_keys = list(io_keys)
        self.__callback = callback

    def execute(self, context: 'CommandContext') -> Any:
        if inspect.iscoroutinefunction(self.__callback):
            return asyncio.run(self.__callback(context))
        return self.__callback(context)
