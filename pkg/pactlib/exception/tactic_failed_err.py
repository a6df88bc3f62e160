from ..exception.tactic_err import TacticErr


class TacticFailedErr(TacticErr):
    def __init__(self, reason: str):
        super().__init__('tactic-failed', reason)
        self.reason = reason
