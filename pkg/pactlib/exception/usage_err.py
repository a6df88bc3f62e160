from pactlib.exception.exit_codes import ExitCodes
from ..exception.pact_err import PactErr


class UsageErr(PactErr):
    def __init__(self, message: str, usage: str = None):
        super().__init__('cli-usage', message, {"usage": usage} if usage else None, ExitCodes.USAGE)
        self.usage = usage
