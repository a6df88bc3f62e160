from pactlib.dispatcher.callback_info import CallbackInfo
from pactlib.dispatcher.command_dispatcher import CommandDispatcher
