from ..exception.tactic_err import TacticErr


class TacticTimeoutErr(TacticErr):
    def __init__(self, seconds: float):
        super().__init__('tactic-timeout', f"Tactic exceeded {seconds}s", {"seconds": seconds})
        self.seconds = seconds
