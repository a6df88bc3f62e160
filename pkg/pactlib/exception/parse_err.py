from ..exception.pact_err import PactErr


class ParseErr(PactErr):
    def __init__(self, message: str, offset: int, source: str = None):
        super().__init__('kernel-parse', f"{message} (at byte {offset})", {"offset": offset, "source": source})
        self.offset = offset
