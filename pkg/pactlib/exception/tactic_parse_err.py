from ..exception.tactic_err import TacticErr


class TacticParseErr(TacticErr):
    def __init__(self, command: str, reason: str = None):
        super().__init__('tactic-parse', f"Cannot parse tactic '{command}'" + (f": {reason}" if reason else ''))
        self.command = command
