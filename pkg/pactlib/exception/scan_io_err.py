from ..exception.pact_err import PactErr


class ScanIoErr(PactErr):
    def __init__(self, path: str, reason: str):
        super().__init__('scan-io', f"Cannot read '{path}': {reason}", {"path": path})
        self.path = path
